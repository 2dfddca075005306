#pragma once

// Command-line driver:
//
//   f5b compute --input FILE --engine {f5b|buchberger|matrixf5}
//               [--strategy {incremental|mindeg}] [--reduce] [--stats PATH]
//               [--trace] [--max-degree D] [--degree-cap D]
//               [--relaxed-reduction] [--no-syzygy] [--no-rewritten]
//               [--dump-matrices DIR]
//
// Exit status: 0 success, 1 usage or input error, 2 degree cap exceeded.
// The basis goes to stdout, one polynomial per line; trace lines go to stderr.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "f5b/buchberger.hpp"
#include "f5b/error.hpp"
#include "f5b/f5b.hpp"
#include "f5b/matrix_f5.hpp"
#include "f5b/stats.hpp"
#include "f5b/text.hpp"

namespace f5b {

inline nlohmann::json stats_to_json(const RunStats& s) {
  return nlohmann::json{{"schema", 1},
                        {"pairs_created", s.pairs_created},
                        {"rejected_syzygy", s.rejected_syzygy},
                        {"rejected_rewritten", s.rejected_rewritten},
                        {"rejected_sig_tie", s.rejected_sig_tie},
                        {"reduction_steps", s.reduction_steps},
                        {"zero_reductions", s.zero_reductions},
                        {"basis_size", s.basis_size},
                        {"elapsed_ms", s.elapsed_ms}};
}

inline RunStats stats_from_json(const nlohmann::json& j) {
  RunStats s;
  s.pairs_created = j.at("pairs_created").get<std::uint64_t>();
  s.rejected_syzygy = j.at("rejected_syzygy").get<std::uint64_t>();
  s.rejected_rewritten = j.at("rejected_rewritten").get<std::uint64_t>();
  s.rejected_sig_tie = j.at("rejected_sig_tie").get<std::uint64_t>();
  s.reduction_steps = j.at("reduction_steps").get<std::uint64_t>();
  s.zero_reductions = j.at("zero_reductions").get<std::uint64_t>();
  s.basis_size = j.at("basis_size").get<std::uint64_t>();
  s.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
  return s;
}

inline void emit_stats(const RunStats& stats, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write stats to " + path.string());
  out << stats_to_json(stats).dump(2) << '\n';
  if (!out) throw IoError("cannot write stats to " + path.string());
}

struct ComputeOptions {
  std::string input;
  std::string engine = "f5b";
  std::string strategy = "mindeg";
  bool reduce = false;
  std::string stats_path;
  bool trace = false;
  std::optional<std::uint64_t> max_degree;
  std::optional<std::uint64_t> degree_cap;
  bool relaxed_reduction = false;
  bool no_syzygy = false;
  bool no_rewritten = false;
  std::string dump_dir;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

template <CoefficientField K>
void print_basis(std::vector<Polynomial<K>> basis, bool reduce, std::ostream& out) {
  if (reduce) {
    basis = reduce_basis(basis);
  } else if (!basis.empty()) {
    const auto& ord = basis.front().ring()->order;
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const auto& a, const auto& b) { return ord.greater(a.lpp(), b.lpp()); });
  }
  for (const auto& p : basis) out << to_string(p) << '\n';
}

template <CoefficientField K>
RunStats compute(const ComputeOptions& o, const RingPtr<K>& ring, const std::vector<Polynomial<K>>& polys,
                 std::ostream& out, std::ostream& err) {
  TraceSink trace;
  if (o.trace) trace = [&err](const std::string& line) { err << line << '\n'; };

  if (o.engine == "f5b") {
    F5bConfig cfg;
    cfg.strategy = o.strategy == "incremental" ? Strategy::Incremental : Strategy::MinDegree;
    cfg.syzygy_criterion = !o.no_syzygy;
    cfg.rewritten_criterion = !o.no_rewritten;
    cfg.relaxed_reduction = o.relaxed_reduction;
    cfg.degree_cap = o.degree_cap;
    cfg.trace = trace;
    auto res = f5b(polys, cfg);
    print_basis(std::move(res.basis), o.reduce, out);
    return res.stats;
  }
  if (o.engine == "buchberger") {
    auto res = buchberger_run(polys);
    print_basis(std::move(res.basis), o.reduce, out);
    return res.stats;
  }
  // matrixf5
  if (!o.max_degree) throw InputError("--engine matrixf5 requires --max-degree");
  MatrixF5Config cfg;
  cfg.max_degree = *o.max_degree;
  cfg.syzygy_criterion = !o.no_syzygy;
  cfg.rewritten_criterion = !o.no_rewritten;
  cfg.trace = trace;
  MatrixObserver<K> observe;
  if (!o.dump_dir.empty()) {
    std::filesystem::path dir(o.dump_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string());
    observe = [dir, ring](std::uint64_t d, unsigned pass, MatrixPhase phase, const MacaulayMatrix<K>& M) {
      std::string name = "deg" + std::to_string(d);
      if (pass > 1) name += "_pass" + std::to_string(pass);
      name += phase == MatrixPhase::Pre ? "_pre.txt" : "_post.txt";
      write_file(dir / name, format_matrix(M, ring->field, ring->variables));
    };
  }
  auto res = matrix_f5(polys, cfg, observe);
  print_basis(std::move(res.basis), o.reduce, out);
  return res.stats;
}

}  // namespace detail

/// Runs the CLI with `args` (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases with the F5 algorithm in Buchberger's style", "f5b"};
  app.require_subcommand(1);
  ComputeOptions o;
  auto* compute = app.add_subcommand("compute", "compute a Groebner basis of a system file");
  compute->add_option("--input", o.input, "system file")->required();
  compute->add_option("--engine", o.engine, "engine")
      ->check(CLI::IsMember({"f5b", "buchberger", "matrixf5"}))
      ->required();
  compute->add_option("--strategy", o.strategy, "pair selection for f5b")
      ->check(CLI::IsMember({"incremental", "mindeg"}));
  compute->add_flag("--reduce", o.reduce, "print the reduced Groebner basis");
  compute->add_option("--stats", o.stats_path, "write run statistics as JSON");
  compute->add_flag("--trace", o.trace, "stream loop events to stderr");
  compute->add_option("--max-degree", o.max_degree, "last degree processed by matrixf5");
  compute->add_option("--degree-cap", o.degree_cap, "abort f5b beyond this lcm degree");
  compute->add_flag("--relaxed-reduction", o.relaxed_reduction, "skip reducer vetting in F5-reduction");
  compute->add_flag("--no-syzygy", o.no_syzygy, "disable the Syzygy Criterion");
  compute->add_flag("--no-rewritten", o.no_rewritten, "disable the Rewritten Criterion");
  compute->add_option("--dump-matrices", o.dump_dir, "write matrixf5 matrices to this directory");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << (app.got_subcommand(compute) ? compute->help() : app.help());
    return 1;
  }

  try {
    const SystemFile sys = parse_system_file(detail::read_file(o.input));
    const RunStats stats = visit_system(sys, [&](const auto& ring, auto polys) {
      return detail::compute(o, ring, polys, out, err);
    });
    if (!o.stats_path.empty()) emit_stats(stats, o.stats_path);
    return 0;
  } catch (const DegreeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 1;
  }
}

}  // namespace f5b
