#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "f5b/buchberger.hpp"
#include "f5b/f5b.hpp"
#include "f5b/labeled.hpp"
#include "f5b/polynomial.hpp"
#include "f5b/text.hpp"

namespace f5b::testing {

inline std::filesystem::path corpus_dir() { return F5B_CORPUS_DIR; }
inline std::filesystem::path samples_dir() { return F5B_SAMPLES_DIR; }

/// Sorted *.sys files under `dir`.
inline std::vector<std::filesystem::path> system_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".sys") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline SystemFile load_system(const std::filesystem::path& p) { return parse_system_file(slurp(p)); }

inline RingPtr<RationalField> q_ring(std::vector<std::string> vars, OrderKind order = OrderKind::GrevLex) {
  return make_ring(RationalField{}, std::move(vars), MonomialOrder(order));
}

inline RingPtr<PrimeField> gf_ring(std::int64_t p, std::vector<std::string> vars,
                                   OrderKind order = OrderKind::GrevLex) {
  return make_ring(PrimeField(p), std::move(vars), MonomialOrder(order));
}

template <CoefficientField K>
Polynomial<K> poly(const RingPtr<K>& ring, std::string_view text) {
  return parse_polynomial(ring, text);
}

template <CoefficientField K>
std::vector<Polynomial<K>> polys(const RingPtr<K>& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial<K>> out;
  for (auto t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

/// Monomial written as text in the ring's variables ("1" allowed).
template <CoefficientField K>
Monomial mono(const RingPtr<K>& ring, std::string_view text) {
  return parse_polynomial(ring, text).lpp();
}

template <CoefficientField K>
Signature sig(const RingPtr<K>& ring, std::string_view monomial, std::size_t index) {
  return Signature{mono(ring, monomial), index};
}

template <CoefficientField K>
LabeledRef<K> labeled(const RingPtr<K>& ring, std::string_view monomial, std::size_t index, std::string_view p,
                      std::uint64_t gen) {
  return std::make_shared<const LabeledPoly<K>>(
      LabeledPoly<K>{sig(ring, monomial, index), parse_polynomial(ring, p), gen});
}

template <CoefficientField K>
std::vector<std::string> render(const std::vector<Polynomial<K>>& basis) {
  std::vector<std::string> out;
  for (const auto& p : basis) out.push_back(to_string(p));
  return out;
}

template <CoefficientField K>
std::vector<std::string> reduced(const std::vector<Polynomial<K>>& basis) {
  return render(reduce_basis(basis));
}

}  // namespace f5b::testing
