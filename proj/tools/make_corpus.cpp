// Writes the frozen random corpora used by the test suites:
//   <out>/random/  GF(7), GF(32003) and Q systems (2-4 vars, 2-4 generators, degree <= 3)
//   <out>/homogeneous/  GF(23) quadrics (3 vars, 3 generators)
//
// Only std::mt19937_64 output is used (its sequence is fixed by the standard),
// so a given seed reproduces the same files everywhere.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

const std::vector<std::string> kNames = {"x", "y", "z", "w"};

std::string monomial_text(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::vector<int> random_monomial(Rng& rng, int nvars, int degree) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.between(0, nvars - 1))];
  return e;
}

/// Sparse generator: distinct monomials with nonzero coefficients, at least one of positive degree.
std::string random_poly(Rng& rng, int nvars, int max_deg, std::int64_t cmin, std::int64_t cmax) {
  const int nterms = static_cast<int>(rng.between(2, 4));
  std::set<std::vector<int>> monos;
  monos.insert(random_monomial(rng, nvars, static_cast<int>(rng.between(1, max_deg))));
  for (int guard = 0; static_cast<int>(monos.size()) < nterms && guard < 50; ++guard) {
    monos.insert(random_monomial(rng, nvars, static_cast<int>(rng.between(0, max_deg))));
  }
  std::string out;
  for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
    std::int64_t c = 0;
    while (c == 0) c = rng.between(cmin, cmax);
    const std::string m = monomial_text(*it);
    std::string term = m.empty() ? std::to_string(c < 0 ? -c : c)
                                 : (c == 1 || c == -1 ? m : std::to_string(c < 0 ? -c : c) + "*" + m);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

void write_system(const std::filesystem::path& path, int nvars, const std::string& field,
                  const std::vector<std::string>& polys) {
  std::ofstream out(path);
  out << "vars:";
  for (int i = 0; i < nvars; ++i) out << ' ' << kNames[static_cast<std::size_t>(i)];
  out << "\nfield: " << field << "\norder: grevlex\n";
  for (const auto& p : polys) out << p << '\n';
}

std::vector<std::string> distinct_polys(Rng& rng, int count, int nvars, int max_deg, std::int64_t cmin,
                                        std::int64_t cmax) {
  std::vector<std::string> polys;
  std::set<std::string> seen;
  while (static_cast<int>(polys.size()) < count) {
    auto p = random_poly(rng, nvars, max_deg, cmin, cmax);
    if (seen.insert(p).second) polys.push_back(p);
  }
  return polys;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate the frozen test corpora"};
  std::string out_dir = "tests/corpus";
  std::uint64_t seed = 20100519;
  int per_prime = 100, rationals = 20, homogeneous = 40;
  app.add_option("--out", out_dir);
  app.add_option("--seed", seed);
  app.add_option("--per-prime", per_prime);
  app.add_option("--rationals", rationals);
  app.add_option("--homogeneous", homogeneous);
  CLI11_PARSE(app, argc, argv);

  namespace fs = std::filesystem;
  const fs::path random_dir = fs::path(out_dir) / "random";
  const fs::path homog_dir = fs::path(out_dir) / "homogeneous";
  fs::create_directories(random_dir);
  fs::create_directories(homog_dir);
  Rng rng(seed);

  int written = 0;
  for (std::int64_t p : {7, 32003}) {
    for (int i = 0; i < per_prime; ++i) {
      const int nvars = static_cast<int>(rng.between(2, 4));
      const int ngens = static_cast<int>(rng.between(2, 4));
      const int max_deg = static_cast<int>(rng.between(2, 3));
      auto polys = distinct_polys(rng, ngens, nvars, max_deg, 1, p - 1);
      char name[64];
      std::snprintf(name, sizeof name, "gf%lld_%03d.sys", static_cast<long long>(p), i);
      write_system(random_dir / name, nvars, "gf " + std::to_string(p), polys);
      ++written;
    }
  }
  for (int i = 0; i < rationals; ++i) {
    const int nvars = static_cast<int>(rng.between(2, 3));
    const int ngens = static_cast<int>(rng.between(2, 3));
    const int max_deg = static_cast<int>(rng.between(2, 3));
    auto polys = distinct_polys(rng, ngens, nvars, max_deg, -9, 9);
    char name[64];
    std::snprintf(name, sizeof name, "q_%03d.sys", i);
    write_system(random_dir / name, nvars, "q", polys);
    ++written;
  }

  // Dense homogeneous quadrics in x, y, z over GF(23).
  const std::vector<std::vector<int>> quad = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (int i = 0; i < homogeneous; ++i) {
    std::vector<std::string> polys;
    std::set<std::string> seen;
    while (polys.size() < 3) {
      std::string out;
      for (const auto& m : quad) {
        const std::int64_t c = rng.between(0, 22);
        if (c == 0) continue;
        const std::string t = c == 1 ? monomial_text(m) : std::to_string(c) + "*" + monomial_text(m);
        out += out.empty() ? t : " + " + t;
      }
      if (!out.empty() && seen.insert(out).second) polys.push_back(out);
    }
    char name[64];
    std::snprintf(name, sizeof name, "h23_%03d.sys", i);
    write_system(homog_dir / name, 3, "gf 23", polys);
    ++written;
  }
  std::cout << "wrote " << written << " systems under " << out_dir << '\n';
  return 0;
}
