#include "wordlab/oracle.hpp"

#include <algorithm>
#include <charconv>

#include "wordlab/error.hpp"

namespace wordlab {

PrefixOracle::PrefixOracle(std::string tag, Alphabet alphabet, Generator generator)
    : tag_(std::move(tag)), alphabet_(std::move(alphabet)), generator_(std::move(generator)) {}

Word PrefixOracle::prefix(std::size_t n) const {
  auto letters = generator_(n);
  letters.resize(n);
  return Word(alphabet_, std::move(letters));
}

PrefixOracle PrefixOracle::fixed_point(const Morphism& m, Letter a, std::string tag) {
  if (!m.is_prolongable(a)) throw NotProlongableError("oracle morphism is not prolongable");
  if (tag.empty()) tag = "fixed_point(" + m.to_string() + ")";
  return PrefixOracle(std::move(tag), m.codomain(),
                      [m, a](std::size_t n) { return fixed_point_prefix(m, a, n).vec(); });
}

Morphism thue_morse_morphism() { return parse_morphism("0->01;1->10"); }
Morphism fibonacci_morphism() { return parse_morphism("a->ab;b->a"); }
Morphism thue_ternary_morphism() { return parse_morphism("a->abc;b->ac;c->b"); }
Morphism makela_morphism() { return parse_morphism("0->03;1->43;3->1;4->01"); }

PrefixOracle PrefixOracle::thue_morse() { return fixed_point(thue_morse_morphism(), 0, "thue_morse"); }
PrefixOracle PrefixOracle::fibonacci() { return fixed_point(fibonacci_morphism(), 0, "fibonacci"); }
PrefixOracle PrefixOracle::thue_ternary() { return fixed_point(thue_ternary_morphism(), 0, "thue_ternary"); }
PrefixOracle PrefixOracle::tribonacci() {
  return fixed_point(parse_morphism("a->ab;b->ac;c->a"), 0, "tribonacci");
}
PrefixOracle PrefixOracle::makela() { return fixed_point(makela_morphism(), 0, "makela"); }

PrefixOracle PrefixOracle::sturmian(std::vector<unsigned> digits) {
  if (digits.empty()) throw DomainError("sturmian oracle needs at least one continued-fraction digit");
  std::string tag = "sturmian:";
  for (std::size_t i = 0; i < digits.size(); ++i) tag += (i ? "," : "") + std::to_string(digits[i]);
  // Validate once.
  (void)sturmian_prefix(digits, 1);
  return PrefixOracle(std::move(tag), Alphabet::latin(2),
                      [digits](std::size_t n) { return sturmian_prefix(digits, n).vec(); });
}

PrefixOracle PrefixOracle::periodic(const Word& period) {
  if (period.empty()) throw DomainError("periodic oracle needs a nonempty period");
  return PrefixOracle("periodic:" + period.to_string(), period.alphabet(), [period](std::size_t n) {
    std::vector<Letter> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = period[i % period.size()];
    return out;
  });
}

PrefixOracle PrefixOracle::constant(std::size_t alphabet_size, Letter a) {
  Alphabet alphabet = Alphabet::latin(alphabet_size);
  if (!alphabet.contains(a)) throw DomainMismatchError("constant letter outside alphabet");
  return PrefixOracle("constant", alphabet, [a](std::size_t n) { return std::vector<Letter>(n, a); });
}

namespace {

std::vector<unsigned> parse_digits(std::string_view s) {
  std::vector<unsigned> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad continued-fraction digit '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PrefixOracle make_oracle(std::string_view spec) {
  if (spec == "thue_morse" || spec == "thue-morse") return PrefixOracle::thue_morse();
  if (spec == "fibonacci") return PrefixOracle::fibonacci();
  if (spec == "thue_ternary") return PrefixOracle::thue_ternary();
  if (spec == "tribonacci") return PrefixOracle::tribonacci();
  if (spec == "makela") return PrefixOracle::makela();
  if (spec == "constant") return PrefixOracle::constant();
  if (spec.starts_with("sturmian:")) return PrefixOracle::sturmian(parse_digits(spec.substr(9)));
  if (spec.starts_with("periodic:")) return PrefixOracle::periodic(parse_word(spec.substr(9)));
  if (spec.starts_with("morphism:")) {
    auto body = spec.substr(9);
    const auto at = body.rfind('@');
    const Morphism m = parse_morphism(body.substr(0, at));
    Letter start = 0;
    if (at != std::string_view::npos) start = parse_word(body.substr(at + 1), m.domain())[0];
    return PrefixOracle::fixed_point(m, start);
  }
  throw DomainError("unknown oracle '" + std::string(spec) +
                    "' (known: thue_morse, fibonacci, thue_ternary, tribonacci, makela, constant, "
                    "sturmian:<digits>, periodic:<word>, morphism:<spec>@<letter>)");
}

Word zimin_word(std::size_t k) {
  if (k < 1) throw DomainError("zimin word needs k >= 1");
  if (k > 24) throw BudgetError("zimin word Z_k with k > 24 is too long");
  Alphabet alphabet = k <= 9 ? Alphabet(k, std::string("123456789").substr(0, k)) : Alphabet(k);
  std::vector<Letter> z{0};
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Letter> next = z;
    next.push_back(static_cast<Letter>(i));
    next.insert(next.end(), z.begin(), z.end());
    z = std::move(next);
  }
  return Word(alphabet, std::move(z));
}

Word sturmian_prefix(std::span<const unsigned> digits, std::size_t n) {
  if (digits.empty()) throw DomainError("sturmian word needs at least one continued-fraction digit");
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] == 0) throw DomainError("continued-fraction digits after the first must be positive");
  std::vector<Letter> older{1};  // s_{-1} = b
  std::vector<Letter> old{0};    // s_0 = a
  std::size_t m = 0;
  while (old.size() < n || m == 0) {
    const unsigned d = digits[std::min(m, digits.size() - 1)];
    if (d == 0 && m > 0) throw DomainError("continued-fraction expansion (0) does not define a Sturmian word");
    std::vector<Letter> next;
    for (unsigned i = 0; i < d; ++i) next.insert(next.end(), old.begin(), old.end());
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(old);
    old = std::move(next);
    ++m;
  }
  old.resize(n);
  return Word(Alphabet::latin(2), std::move(old));
}

Word fibonacci_finite_word(std::size_t m) {
  std::vector<Letter> older{0};
  std::vector<Letter> old{0, 1};
  if (m == 0) return Word(Alphabet::latin(2), older);
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<Letter> next = old;
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(old);
    old = std::move(next);
  }
  return Word(Alphabet::latin(2), std::move(old));
}

Word classic_word(std::string_view name, std::span<const unsigned> params, std::size_t n) {
  if (name == "zimin") {
    if (params.empty()) throw DomainError("zimin needs parameter k");
    return zimin_word(params[0]);
  }
  if (name == "sturmian") return sturmian_prefix(params, n);
  if (name == "thue_morse" || name == "fibonacci" || name == "thue_ternary" || name == "tribonacci" ||
      name == "makela")
    return make_oracle(name).prefix(n);
  throw DomainError("unknown classic word '" + std::string(name) +
                    "' (known: thue_morse, fibonacci, thue_ternary, tribonacci, makela, zimin, sturmian)");
}

}  // namespace wordlab
