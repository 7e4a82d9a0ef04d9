#include "wordlab/predicates.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "wordlab/abelian.hpp"
#include "wordlab/error.hpp"
#include "wordlab/rational.hpp"

namespace wordlab {

namespace {

std::vector<std::size_t> parse_numbers(std::string_view text, std::string_view spec) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto part = text.substr(start, stop - start);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw ParseError("bad number list in predicate '" + std::string(spec) + "'");
    out.push_back(v);
    start = stop + 1;
  }
  return out;
}

FreenessPredicate long_power(EquivalenceKind kind, std::size_t k, std::size_t n, std::size_t min_period,
                             std::size_t alphabet_size, std::string name) {
  if (n < 2) throw DomainError("power degree must be at least 2");
  if (min_period < 1) throw DomainError("minimum period must be at least 1");
  LongPowerKind lk{kind, k, std::nullopt};
  const bool symmetric = kind != EquivalenceKind::additive;
  return FreenessPredicate(LongPowerChecker(lk, n, min_period, alphabet_size), symmetric, std::move(name));
}

}  // namespace

FreenessPredicate parse_predicate(std::string_view spec, std::size_t alphabet_size) {
  const std::string s(spec);
  if (s == "square-free") return power_free_predicate(Rational(2), false);
  if (s == "cube-free") return power_free_predicate(Rational(3), false);
  if (s == "overlap-free") return power_free_predicate(Rational(2), true);
  if (s.rfind("pattern:", 0) == 0) return pattern_free_predicate(Pattern::parse(spec.substr(8)));
  if (s == "abelian-square-free") return long_power(EquivalenceKind::abelian, 1, 2, 1, alphabet_size, s);
  if (s == "abelian-cube-free") return long_power(EquivalenceKind::abelian, 1, 3, 1, alphabet_size, s);
  auto with_prefix = [&](std::string_view prefix) -> std::optional<std::vector<std::size_t>> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    return parse_numbers(spec.substr(prefix.size()), spec);
  };
  if (auto v = with_prefix("abelian:")) {
    if (v->size() > 2) throw ParseError("abelian:n[,min_period] takes at most two numbers");
    return long_power(EquivalenceKind::abelian, 1, (*v)[0], v->size() > 1 ? (*v)[1] : 1, alphabet_size, s);
  }
  if (auto v = with_prefix("additive:")) {
    if (v->size() > 2) throw ParseError("additive:n[,min_period] takes at most two numbers");
    return long_power(EquivalenceKind::additive, 1, (*v)[0], v->size() > 1 ? (*v)[1] : 1, alphabet_size, s);
  }
  if (auto v = with_prefix("kabelian:")) {
    if (v->size() < 2 || v->size() > 3) throw ParseError("kabelian:k,n[,min_period] takes two or three numbers");
    if ((*v)[0] < 1) throw DomainError("k must be at least 1");
    return long_power(EquivalenceKind::k_abelian, (*v)[0], (*v)[1], v->size() > 2 ? (*v)[2] : 1, alphabet_size, s);
  }
  if (s.rfind("abelian-fractional:", 0) == 0) {
    const Rational r = Rational::parse(spec.substr(19));
    return FreenessPredicate(AbelianFractionalChecker(r, alphabet_size), true, s);
  }
  const std::string power_suffix = "-power-free";
  if (s.size() > power_suffix.size() && s.ends_with(power_suffix)) {
    const auto n = parse_numbers(spec.substr(0, s.size() - power_suffix.size()), spec);
    if (n.size() != 1) throw ParseError("bad power predicate '" + s + "'");
    return power_free_predicate(Rational(static_cast<std::int64_t>(n[0])), false);
  }
  if (s.ends_with("+-free")) return power_free_predicate(Rational::parse(spec.substr(0, s.size() - 6)), true);
  if (s.ends_with("-free")) return power_free_predicate(Rational::parse(spec.substr(0, s.size() - 5)), false);
  throw ParseError("unknown predicate '" + s + "'; expected " + predicate_syntax());
}

std::string predicate_syntax() {
  return "square-free, cube-free, overlap-free, N-power-free, p/q-free, p/q+-free, pattern:<P>, "
         "abelian-square-free, abelian-cube-free, abelian:n[,min_period], kabelian:k,n[,min_period], "
         "additive:n[,min_period], abelian-fractional:s";
}

}  // namespace wordlab
