#include "boolnl/bitfn.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "boolnl/errors.hpp"

namespace boolnl {
namespace {

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

void check_vars(int n) {
  if (n < 1 || n > kMaxVars) {
    throw OutOfRange("variable count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxVars) + "]");
  }
}

int log2_exact(std::size_t len) {
  if (len < 2 || !std::has_single_bit(len)) {
    throw NotPowerOfTwo("truth table length " + std::to_string(len) +
                        " is not 2^n with n >= 1");
  }
  return std::countr_zero(len);
}

// 64-bit pattern whose bit j is parity(mask & j), j in [0, 64).
std::uint64_t parity_pattern(Point low_mask) {
  std::uint64_t w = 0;
  for (unsigned j = 0; j < 64; ++j) {
    w |= std::uint64_t(std::popcount(low_mask & j) & 1) << j;
  }
  return w;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_vars(n);
  words_.assign(word_count(n), 0);
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {}

BooleanFunction BooleanFunction::from_truth_table(std::span<const std::uint8_t> bits) {
  int n = log2_exact(bits.size());
  check_vars(n);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return BooleanFunction(n, std::move(words));
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<std::uint64_t> words) {
  check_vars(n);
  if (words.size() != word_count(n)) {
    throw DimensionMismatch("word count does not match 2^n table");
  }
  if (n < 6) words[0] &= tail_mask(n);
  return BooleanFunction(n, std::move(words));
}

std::vector<std::uint8_t> BooleanFunction::bits() const {
  std::vector<std::uint8_t> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(static_cast<Point>(i));
  return out;
}

BooleanFunction BooleanFunction::complement() const {
  std::vector<std::uint64_t> w(words_);
  for (auto& x : w) x = ~x;
  if (n_ < 6) w[0] &= tail_mask(n_);
  return BooleanFunction(n_, std::move(w));
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
  if (other.n_ != n_) throw DimensionMismatch("xor of functions with different n");
  std::vector<std::uint64_t> w(words_);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= other.words_[i];
  return BooleanFunction(n_, std::move(w));
}

std::uint64_t tail_mask(int n) noexcept {
  return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << n)) - 1);
}

bool evaluate(const BooleanFunction& f, Point u) { return f(u); }

std::uint64_t weight(const BooleanFunction& f) {
  std::uint64_t w = 0;
  for (auto x : f.words()) w += std::popcount(x);
  return w;
}

std::uint64_t distance(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars()) {
    throw DimensionMismatch("distance between functions with different n");
  }
  auto a = f.words();
  auto b = g.words();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

BooleanFunction affine_table(const AffineFunction& alpha, int n) {
  check_vars(n);
  const Point linear = alpha.linear & ((Point{1} << n) - 1);
  const std::uint64_t pattern = parity_pattern(linear & 63);
  const std::uint64_t flip = alpha.a0 ? ~std::uint64_t{0} : 0;
  std::vector<std::uint64_t> words(word_count(n));
  const Point high = linear >> 6;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = (std::popcount(high & static_cast<Point>(w)) & 1) ? ~pattern : pattern;
    words[w] = word ^ flip;
  }
  return BooleanFunction::from_words(n, std::move(words));
}

AnfForm AnfForm::from_monomials(int n, std::vector<Point> monomials) {
  check_vars(n);
  const Point limit = Point{1} << n;
  for (Point m : monomials) {
    if (m >= limit) throw VariableOutOfRange("monomial mask exceeds n variables");
  }
  std::sort(monomials.begin(), monomials.end());
  AnfForm p(n);
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) p.monomials_.push_back(monomials[i]);
    i = j;
  }
  return p;
}

int AnfForm::degree() const noexcept {
  int d = 0;
  for (Point m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

bool AnfForm::evaluate(Point u) const noexcept {
  bool v = false;
  for (Point m : monomials_) v ^= (m & u) == m;
  return v;
}

AnfForm parse_anf(std::string_view text, std::optional<int> n) {
  struct Term {
    std::vector<int> vars;
    bool zero = false;
  };
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_var = [&]() -> int {
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) {
      throw ParseError("expected variable 'x<k>'", pos);
    }
    ++pos;
    std::size_t start = pos;
    long k = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      k = k * 10 + (text[pos] - '0');
      if (k > 1000) throw VariableOutOfRange("variable index too large");
      ++pos;
    }
    if (pos == start) throw ParseError("expected variable index", pos);
    if (k < 1) throw VariableOutOfRange("variable index must be >= 1");
    return static_cast<int>(k);
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  while (true) {
    skip_ws();
    Term term;
    if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
      term.zero = text[pos] == '0';
      ++pos;
    } else {
      term.vars.push_back(parse_var());
      skip_ws();
      while (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        term.vars.push_back(parse_var());
        skip_ws();
      }
    }
    terms.push_back(std::move(term));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }

  int max_var = 1;
  for (const auto& t : terms) {
    for (int v : t.vars) max_var = std::max(max_var, v);
  }
  int nv = n.value_or(max_var);
  check_vars(nv);
  if (max_var > nv) {
    throw VariableOutOfRange("variable x" + std::to_string(max_var) + " exceeds n = " +
                             std::to_string(nv));
  }
  std::vector<Point> masks;
  for (const auto& t : terms) {
    if (t.zero) continue;
    Point m = 0;
    for (int v : t.vars) m |= Point{1} << var_bit(v, nv);
    masks.push_back(m);
  }
  return AnfForm::from_monomials(nv, std::move(masks));
}

bool canonical_term_less(Point a, Point b) noexcept {
  int wa = std::popcount(a), wb = std::popcount(b);
  if (wa != wb) return wa < wb;
  return a > b;  // x1 is the top bit, so lexicographic order is descending
}

std::string format_monomial(Point mask, int n, char var) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (mask & (Point{1} << var_bit(i, n))) {
      if (!out.empty()) out += '*';
      out += var;
      out += std::to_string(i);
    }
  }
  return out;
}

std::string format_anf(const AnfForm& p) {
  std::vector<Point> ms(p.monomials().begin(), p.monomials().end());
  if (ms.empty()) return "0";
  std::sort(ms.begin(), ms.end(), canonical_term_less);
  std::string out;
  for (Point m : ms) {
    if (!out.empty()) out += " + ";
    out += format_monomial(m, p.num_vars());
  }
  return out;
}

std::string format_affine(const AffineFunction& alpha, int n) {
  std::vector<Point> ms;
  if (alpha.a0) ms.push_back(0);
  for (int i = 1; i <= n; ++i) {
    Point bit = Point{1} << var_bit(i, n);
    if (alpha.linear & bit) ms.push_back(bit);
  }
  return format_anf(AnfForm::from_monomials(n, std::move(ms)));
}

AffineFunction parse_affine(std::string_view text, int n) {
  AnfForm p = parse_anf(text, n);
  if (p.degree() > 1) throw ParseError("expression is not affine", 0);
  AffineFunction alpha;
  for (Point m : p.monomials()) {
    if (m == 0) {
      alpha.a0 = true;
    } else {
      alpha.linear |= m;
    }
  }
  return alpha;
}

BooleanFunction parse_truth_table(std::string_view text) {
  std::string_view s = trim(text);
  bool hex = false;
  std::size_t offset = 0;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    hex = true;
    offset = 2;
  } else if (s.size() >= 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    offset = 2;
  } else {
    hex = s.find_first_not_of("01") != std::string_view::npos;
  }
  std::string_view body = s.substr(offset);
  if (body.empty()) throw ParseError("empty truth table", offset);

  std::vector<std::uint8_t> bits;
  if (hex) {
    bits.reserve(body.size() * 4);
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        throw ParseError(std::string("invalid hex digit '") + c + "'", offset + i);
      }
      for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
  } else {
    bits.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] != '0' && body[i] != '1') {
        throw ParseError(std::string("invalid binary digit '") + body[i] + "'", offset + i);
      }
      bits.push_back(body[i] == '1');
    }
  }
  return BooleanFunction::from_truth_table(bits);
}

std::string format_truth_table_hex(const BooleanFunction& f) {
  if (f.num_vars() < 2) return "0b" + format_truth_table_bin(f);
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  out.reserve(2 + f.size() / 4);
  for (std::size_t i = 0; i < f.size(); i += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) v = (v << 1) | f(static_cast<Point>(i + b));
    out += kDigits[v];
  }
  return out;
}

std::string format_truth_table_bin(const BooleanFunction& f) {
  std::string out(f.size(), '0');
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(static_cast<Point>(i))) out[i] = '1';
  }
  return out;
}

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  check_vars(n);
  std::vector<std::uint64_t> words(word_count(n));
  for (auto& w : words) w = rng();
  return BooleanFunction::from_words(n, std::move(words));
}

}  // namespace boolnl
