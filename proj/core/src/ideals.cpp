#include "boolnl/ideals.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

#include "boolnl/errors.hpp"

namespace boolnl {
namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

cpp_int total_generators(const IdealSpec& spec) {
  const cpp_int field = spec.n + 1;
  if (spec.kind == IdealKind::kN) return field + 1;
  return binomial(std::uint64_t{1} << spec.n, static_cast<std::uint64_t>(spec.t)) + field;
}

void check_N_threshold(int n, std::int64_t t) {
  if (t < 0 || t > (std::int64_t{1} << n)) {
    throw OutOfRange("threshold t = " + std::to_string(t) + " outside [0, 2^n]");
  }
}

void check_J_threshold(int n, std::int64_t t) {
  if (t < 1 || t > (std::int64_t{1} << n)) {
    throw OutOfRange("threshold t = " + std::to_string(t) + " outside [1, 2^n]");
  }
}

std::string field_equation(int i) {
  const std::string a = "a" + std::to_string(i);
  return a + "^2 - " + a;
}

}  // namespace

std::string format_linear_form(const LinearForm& p) {
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if (p.vars & (std::uint32_t{1} << i)) {
      if (!out.empty()) out += " + ";
      out += "a" + std::to_string(i);
    }
  }
  if (p.constant) out += out.empty() ? "1" : " + 1";
  return out.empty() ? "0" : out;
}

std::uint32_t cube_point(const AffineFunction& alpha, int n) {
  std::uint32_t point = alpha.a0 ? 1u : 0u;
  for (int i = 1; i <= n; ++i) {
    if (alpha.linear & (Point{1} << var_bit(i, n))) point |= std::uint32_t{1} << i;
  }
  return point;
}

std::vector<LinearForm> affine_factors(const BooleanFunction& f) {
  const int n = f.num_vars();
  std::vector<LinearForm> out(f.size());
  for (Point u = 0; u < f.size(); ++u) {
    LinearForm p{f(u), 1u};
    for (int i = 1; i <= n; ++i) {
      if (u & (Point{1} << var_bit(i, n))) p.vars |= std::uint32_t{1} << i;
    }
    out[u] = p;
  }
  return out;
}

bool JGenerator::evaluate(std::uint32_t cube) const noexcept {
  for (const auto& p : factors) {
    if (!p.evaluate(cube)) return false;
  }
  return true;
}

std::string JGenerator::to_string() const {
  std::string out;
  for (const auto& p : factors) {
    if (!out.empty()) out += '*';
    out += "(" + format_linear_form(p) + ")";
  }
  return out;
}

JGeneratorStream::JGeneratorStream(const BooleanFunction& f, int t)
    : JGeneratorStream(affine_factors(f), t) {}

JGeneratorStream::JGeneratorStream(std::vector<LinearForm> factors, int t)
    : factors_(std::move(factors)) {
  if (t < 1 || static_cast<std::size_t>(t) > factors_.size()) {
    throw OutOfRange("threshold t = " + std::to_string(t) + " outside [1, 2^n]");
  }
  combo_.resize(static_cast<std::size_t>(t));
  for (std::size_t i = 0; i < combo_.size(); ++i) combo_[i] = static_cast<Point>(i);
}

std::optional<JGenerator> JGeneratorStream::next() {
  if (done_) return std::nullopt;
  JGenerator g;
  g.points = combo_;
  g.factors.reserve(combo_.size());
  for (Point h : combo_) g.factors.push_back(factors_[h]);

  // Advance to the next t-subset in lexicographic order.
  const std::size_t t = combo_.size();
  const std::size_t total = factors_.size();
  std::size_t i = t;
  while (i > 0 && combo_[i - 1] == total - t + (i - 1)) --i;
  if (i == 0) {
    done_ = true;
  } else {
    ++combo_[i - 1];
    for (std::size_t j = i; j < t; ++j) combo_[j] = combo_[j - 1] + 1;
  }
  return g;
}

JGeneratorBatch enumerate_J_generators(const BooleanFunction& f, int t, std::uint64_t limit) {
  JGeneratorStream stream(f, t);
  JGeneratorBatch batch;
  while (auto g = stream.next()) {
    if (batch.generators.size() == limit) {
      batch.truncated = true;
      break;
    }
    batch.generators.push_back(std::move(*g));
  }
  return batch;
}

std::string IdealSpec::generator_count() const { return total_generators(*this).str(); }

std::optional<std::uint64_t> IdealSpec::generator_count_u64() const {
  const cpp_int total = total_generators(*this);
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return total.convert_to<std::uint64_t>();
}

IdealSpec build_N_ideal(const BooleanFunction& f, std::int64_t t) {
  check_N_threshold(f.num_vars(), t);
  IdealSpec spec;
  spec.kind = IdealKind::kN;
  spec.n = f.num_vars();
  spec.t = t;
  spec.polynomial = nl_polynomial_fast(f);
  return spec;
}

IdealSpec build_J_ideal(const BooleanFunction& f, std::int64_t t) {
  check_J_threshold(f.num_vars(), t);
  IdealSpec spec;
  spec.kind = IdealKind::kJ;
  spec.n = f.num_vars();
  spec.t = t;
  spec.factors = affine_factors(f);
  return spec;
}

bool variety_nonempty_N(const DistanceVector& d, std::int64_t t) {
  check_N_threshold(d.n, t);
  return std::find(d.dists.begin(), d.dists.end(), t) != d.dists.end();
}

bool variety_nonempty_N(const BooleanFunction& f, std::int64_t t) {
  check_N_threshold(f.num_vars(), t);
  return variety_nonempty_N(evaluate_all(nl_polynomial_fast(f)), t);
}

std::vector<AffineFunction> variety_points_N(const DistanceVector& d, std::int64_t t) {
  check_N_threshold(d.n, t);
  std::vector<AffineFunction> out;
  for (std::size_t j = 0; j < d.dists.size(); ++j) {
    if (d.dists[j] == t) out.push_back(DistanceVector::affine_at(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t nonlinearity_via_N(const BooleanFunction& f) {
  const DistanceVector d = evaluate_all(nl_polynomial_fast(f));
  std::int64_t t = 0;
  while (!variety_nonempty_N(d, t)) ++t;
  return t;
}

bool variety_nonempty_J(const DistanceVector& d, std::int64_t t) {
  check_J_threshold(d.n, t);
  return *std::min_element(d.dists.begin(), d.dists.end()) <= t - 1;
}

std::vector<AffineFunction> variety_points_J(const DistanceVector& d, std::int64_t t) {
  check_J_threshold(d.n, t);
  std::vector<AffineFunction> out;
  for (std::size_t j = 0; j < d.dists.size(); ++j) {
    if (d.dists[j] <= t - 1) out.push_back(DistanceVector::affine_at(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineFunction> variety_points_J_direct(const BooleanFunction& f, std::int64_t t) {
  const int n = f.num_vars();
  if (n > kDirectJMaxVars) {
    throw TooLarge("direct J-variety evaluation is capped at n = " +
                   std::to_string(kDirectJMaxVars));
  }
  check_J_threshold(n, t);
  const std::vector<LinearForm> factors = affine_factors(f);
  std::vector<AffineFunction> out;
  for (int a0 = 0; a0 < 2; ++a0) {
    for (Point linear = 0; linear < (Point{1} << n); ++linear) {
      const AffineFunction alpha{a0 != 0, linear};
      const std::uint32_t cube = cube_point(alpha, n);
      JGeneratorStream stream(factors, static_cast<int>(t));
      bool vanishes = true;
      while (auto g = stream.next()) {
        if (g->evaluate(cube)) {
          vanishes = false;
          break;
        }
      }
      if (vanishes) out.push_back(alpha);
    }
  }
  return out;
}

bool variety_nonempty_J(const BooleanFunction& f, std::int64_t t, VarietyMode mode) {
  if (mode == VarietyMode::kDirect) return !variety_points_J_direct(f, t).empty();
  check_J_threshold(f.num_vars(), t);
  return variety_nonempty_J(evaluate_all(nl_polynomial_fast(f)), t);
}

std::int64_t nonlinearity_via_J(const BooleanFunction& f) {
  const DistanceVector d = evaluate_all(nl_polynomial_fast(f));
  std::int64_t j = 1;
  while (!variety_nonempty_J(d, j)) ++j;
  return j - 1;
}

NlReport nonlinearity_report_via_N(const BooleanFunction& f) {
  const DistanceVector d = evaluate_all(nl_polynomial_fast(f));
  NlReport r;
  r.n = f.num_vars();
  r.method = Method::kViaN;
  while (!variety_nonempty_N(d, r.value)) ++r.value;
  r.nearest = variety_points_N(d, r.value);
  return r;
}

NlReport nonlinearity_report_via_J(const BooleanFunction& f) {
  const DistanceVector d = evaluate_all(nl_polynomial_fast(f));
  NlReport r;
  r.n = f.num_vars();
  r.method = Method::kViaJ;
  std::int64_t j = 1;
  while (!variety_nonempty_J(d, j)) ++j;
  r.value = j - 1;
  r.nearest = variety_points_J(d, j);
  return r;
}

bool all_t_monomials_vanish(std::span<const std::uint8_t> point, int t) {
  const std::size_t s = point.size();
  if (t < 0) throw OutOfRange("monomial degree must be >= 0");
  if (static_cast<std::size_t>(t) > s) return true;
  std::vector<std::size_t> combo(static_cast<std::size_t>(t));
  for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
  while (true) {
    bool product = true;
    for (std::size_t h : combo) product = product && point[h] != 0;
    if (product) return false;
    std::size_t i = combo.size();
    while (i > 0 && combo[i - 1] == s - combo.size() + (i - 1)) --i;
    if (i == 0) return true;
    ++combo[i - 1];
    for (std::size_t j = i; j < combo.size(); ++j) combo[j] = combo[j - 1] + 1;
  }
}

std::string export_ideal(const IdealSpec& spec, std::uint64_t limit) {
  std::vector<std::string> lines;
  bool truncated = false;
  auto emit = [&](std::string line) {
    if (lines.size() == limit) {
      truncated = true;
      return false;
    }
    lines.push_back(std::move(line));
    return true;
  };

  bool more = true;
  if (spec.kind == IdealKind::kN) {
    more = emit(format_nlp_expression(spec.polynomial.value(), spec.t));
  } else {
    JGeneratorStream stream(spec.factors, static_cast<int>(spec.t));
    while (more) {
      auto g = stream.next();
      if (!g) break;
      more = emit(g->to_string());
    }
  }
  for (int i = 0; more && i <= spec.n; ++i) more = emit(field_equation(i));

  std::string out = "# ideal kind=";
  out += spec.kind == IdealKind::kJ ? "J" : "N";
  out += " n=" + std::to_string(spec.n);
  out += " t=" + std::to_string(spec.t);
  out += spec.kind == IdealKind::kJ ? " field=GF2" : " field=QQ";
  out += " generators=" + spec.generator_count();
  out += " emitted=" + std::to_string(lines.size());
  out += " truncated=" + std::string(truncated ? "1" : "0");
  out += '\n';
  for (const auto& line : lines) out += line + '\n';
  return out;
}

}  // namespace boolnl
