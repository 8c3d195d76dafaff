#include "diffdef/series.hpp"

#include <algorithm>

#include "diffdef/errors.hpp"

namespace diffdef {

TruncSeries::TruncSeries(std::vector<Rational> coeffs, unsigned known) : c_(std::move(coeffs)), known_(known) {
  if (c_.size() < 1) c_.resize(1);
  known_ = std::min<unsigned>(known_, truncation());
}

TruncSeries TruncSeries::constant(const Rational& c, unsigned n) {
  TruncSeries r(n);
  r.c_[0] = c;
  return r;
}

TruncSeries TruncSeries::s(unsigned n) {
  TruncSeries r(n);
  if (n > 1) r.c_[1] = 1;
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  const unsigned n = std::min(truncation(), o.truncation());
  c_.resize(n);
  for (unsigned i = 0; i < n; ++i) c_[i] += o.c_[i];
  known_ = std::min({known_, o.known_, n});
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  const unsigned n = std::min(truncation(), o.truncation());
  c_.resize(n);
  for (unsigned i = 0; i < n; ++i) c_[i] -= o.c_[i];
  known_ = std::min({known_, o.known_, n});
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const unsigned n = std::min(a.truncation(), b.truncation());
  std::vector<Rational> r(n, Rational(0));
  Rational tmp;
  for (unsigned i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; i + j < n; ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r[i + j] += tmp;
    }
  }
  return TruncSeries(std::move(r), std::min(a.known_, b.known_));
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries r = constant(Rational(1), truncation());
  r.known_ = known_;
  TruncSeries b = *this;
  while (e != 0) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) throw DivisionByZero();
  const unsigned n = truncation();
  std::vector<Rational> r(n, Rational(0));
  const Rational inv0 = 1 / c_[0];
  r[0] = inv0;
  for (unsigned k = 1; k < n; ++k) {
    Rational acc(0);
    for (unsigned j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return TruncSeries(std::move(r), known_);
}

TruncSeries TruncSeries::derivative() const {
  const unsigned n = truncation();
  std::vector<Rational> r(n, Rational(0));
  for (unsigned i = 0; i + 1 < n; ++i) r[i] = c_[i + 1] * (i + 1);
  return TruncSeries(std::move(r), known_ == 0 ? 0 : known_ - 1);
}

bool TruncSeries::equals_upto(const TruncSeries& o) const {
  const unsigned k = std::min(known_, o.known_);
  for (unsigned i = 0; i < k; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool TruncSeries::is_zero() const {
  if (known_ == 0) throw Inconclusive("cannot decide: series has no known coefficients");
  for (unsigned i = 0; i < known_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::string TruncSeries::to_string() const {
  std::string out;
  for (unsigned i = 0; i < known_; ++i) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c_[i]);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += i == 1 ? "s" : "s^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(s^" + std::to_string(known_) + ")";
}

namespace {

TruncSeries upoly_series(const UPoly& p, const Rational& offset, unsigned n) {
  const UPoly shifted = p.shifted(offset);
  std::vector<Rational> c(n, Rational(0));
  for (unsigned i = 0; i < n && i < shifted.coeffs().size(); ++i) c[i] = shifted.coeffs()[i];
  // a polynomial of degree >= n is still exact in the first n coefficients
  return TruncSeries(std::move(c), n);
}

}  // namespace

TruncSeries interpret_t(const ModelConfig& cfg) {
  TruncSeries r = TruncSeries::s(cfg.truncation);
  return r + TruncSeries::constant(cfg.t_offset, cfg.truncation);
}

TruncSeries interpret_ratfun(const RationalFunction& q, const ModelConfig& cfg) {
  const unsigned n = cfg.truncation;
  TruncSeries num = upoly_series(q.num(), cfg.t_offset, n);
  if (q.is_polynomial()) return num;
  TruncSeries den = upoly_series(q.den(), cfg.t_offset, n);
  if (den.coeff(0) == 0)
    throw PoleError("pole of " + q.to_string() + " at t = " + cfg.t_offset.get_str());
  return num * den.inverse();
}

TruncSeries random_generic(const ModelConfig& cfg, std::mt19937_64& rng) {
  const long b = static_cast<long>(cfg.coeff_bound);
  std::uniform_int_distribution<long> num(-b, b);
  std::uniform_int_distribution<long> den(1, b);
  std::vector<Rational> c(cfg.truncation);
  for (auto& x : c) {
    long p = num(rng);
    long q = den(rng);
    x = make_rational(Integer(p), Integer(q));
  }
  return TruncSeries(std::move(c), cfg.truncation);
}

TruncSeries eval_diffpoly_series(const DiffPoly& f, const std::map<Var, TruncSeries>& assignment,
                                 const ModelConfig& cfg) {
  const unsigned n = cfg.truncation;
  if (n < f.max_order() + 2)
    throw Inconclusive("cannot decide: truncation " + std::to_string(n) + " below order " +
                       std::to_string(f.max_order()) + " + 2");
  std::map<DerIndet, TruncSeries> values;
  std::map<RationalFunction, TruncSeries> coeff_cache;
  TruncSeries acc(n);
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    auto ci = coeff_cache.find(c);
    if (ci == coeff_cache.end()) ci = coeff_cache.emplace(c, interpret_ratfun(c, cfg)).first;
    TruncSeries term = ci->second;
    for (const auto& [d, e] : m.factors()) {
      auto it = values.find(d);
      if (it == values.end()) {
        auto a = assignment.find(d.var);
        if (a == assignment.end()) throw HypothesisError("no value assigned to " + d.var.to_string());
        TruncSeries v = a->second;
        for (unsigned k = 0; k < d.order; ++k) {
          values.try_emplace(DerIndet{d.var, k}, v);
          v = v.derivative();
        }
        it = values.insert_or_assign(d, std::move(v)).first;
      }
      term = term * (e == 1 ? it->second : it->second.pow(e));
    }
    if (first) {
      acc = std::move(term);
      first = false;
    } else {
      acc += term;
    }
  }
  if (first) {
    // the zero polynomial: exact zero at full precision
    return TruncSeries(n);
  }
  return acc;
}

Rational pole_free_offset(const std::vector<DiffPoly>& polys, const ModelConfig& cfg) {
  auto ok = [&](const Rational& at) {
    for (const auto& p : polys)
      for (const auto& [m, c] : p.terms())
        if (!c.is_polynomial() && c.den().eval(at) == 0) return false;
    return true;
  };
  if (ok(cfg.t_offset)) return cfg.t_offset;
  for (long k = 1;; ++k)
    if (ok(Rational(k))) return Rational(k);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace diffdef
