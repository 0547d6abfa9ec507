#include "loopvertex/series.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace loopvertex {

bool Exponents::is_zero() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

Exponents& Exponents::operator+=(const Exponents& o) {
  for (int i = 0; i < kMaxVars; ++i) e[i] += o.e[i];
  return *this;
}

Exponents& Exponents::operator-=(const Exponents& o) {
  for (int i = 0; i < kMaxVars; ++i) e[i] -= o.e[i];
  return *this;
}

Exponents Exponents::operator-() const {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = -e[i];
  return r;
}

Exponents Exponents::times(std::int64_t k) const {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int32_t>(e[i] * k);
  return r;
}

std::size_t ExponentsHash::operator()(const Exponents& x) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : x.e) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names, std::vector<int> weights, int scale) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  if (names.size() != weights.size()) throw std::invalid_argument("names/weights size mismatch");
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("negative grading weight");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
  }
  std::shared_ptr<VarSet> v(new VarSet());
  v->names_ = std::move(names);
  v->weights_ = std::move(weights);
  v->scale_ = scale;
  return v;
}

int VarSet::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable " + name);
  return *i;
}

std::optional<int> VarSet::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Degree VarSet::degree(const Exponents& e) const {
  Degree d = 0;
  for (int i = 0; i < size(); ++i) d += static_cast<Degree>(weights_[i]) * e[i];
  return d;
}

bool VarSet::same_as(const VarSet& o) const {
  return this == &o || (names_ == o.names_ && weights_ == o.weights_ && scale_ == o.scale_);
}

namespace {

VarSetPtr cached_vars(int key, bool q) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, VarSetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{key, q}];
  if (!slot) {
    std::vector<std::string> names;
    if (q) {
      for (int i = 0; i < key; ++i) names.push_back("q" + std::to_string(i));
    } else {
      for (int i = 1; i < key; ++i) names.push_back("x" + std::to_string(i));
      names.push_back("u");
    }
    slot = VarSet::make(names, std::vector<int>(names.size(), 1), 2 * key);
  }
  return slot;
}

}  // namespace

VarSetPtr q_vars(int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("n out of range");
  return cached_vars(n, true);
}

VarSetPtr xu_vars(int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("n out of range");
  return cached_vars(n, false);
}

FracSeries::FracSeries(VarSetPtr vars, Degree bound) : vars_(std::move(vars)), bound_(std::min(bound, kExact)) {
  if (!vars_) throw std::invalid_argument("series without variables");
}

FracSeries FracSeries::constant(VarSetPtr vars, const Cyclotomic& c, Degree bound) {
  FracSeries s(std::move(vars), bound);
  s.add_term(Exponents{}, c);
  return s;
}

FracSeries FracSeries::monomial(VarSetPtr vars, const Exponents& e, const Cyclotomic& c, Degree bound) {
  FracSeries s(std::move(vars), bound);
  s.add_term(e, c);
  return s;
}

FracSeries FracSeries::variable(VarSetPtr vars, const std::string& name, Degree bound) {
  Exponents e;
  e[vars->index(name)] = vars->scale();
  return monomial(std::move(vars), e, 1, bound);
}

Degree FracSeries::valuation() const {
  Degree v = kExact;
  for (const auto& [e, c] : terms_) v = std::min(v, vars_->degree(e));
  return v;
}

Degree FracSeries::max_degree() const {
  Degree v = -kExact;
  for (const auto& [e, c] : terms_) v = std::max(v, vars_->degree(e));
  return v;
}

Cyclotomic FracSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void FracSeries::add_term(const Exponents& e, const Cyclotomic& c) {
  if (c.is_zero() || vars_->degree(e) > bound_) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FracSeries FracSeries::truncated(Degree b) const {
  FracSeries out(vars_, std::min(bound_, b));
  for (const auto& [e, c] : terms_)
    if (vars_->degree(e) <= out.bound_) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

FracSeries FracSeries::scaled(const Cyclotomic& k) const {
  FracSeries out(vars_, bound_);
  if (k.is_zero()) {
    out.bound_ = kExact;
    return out;
  }
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * k);
  return out;
}

FracSeries FracSeries::shifted(const Exponents& m) const {
  FracSeries out(vars_, deg_add(bound_, vars_->degree(m)));
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + m, c);
  return out;
}

FracSeries FracSeries::conj() const {
  FracSeries out(vars_, bound_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c.conj());
  return out;
}

FracSeries FracSeries::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != vars_->size()) throw std::invalid_argument("bad permutation size");
  for (int i = 0; i < vars_->size(); ++i)
    if (vars_->weights()[i] != vars_->weights()[perm[i]])
      throw std::invalid_argument("permutation mixes grading weights");
  FracSeries out(vars_, bound_);
  for (const auto& [e, c] : terms_) {
    Exponents f;
    for (int i = 0; i < vars_->size(); ++i) f[perm[i]] = e[i];
    out.terms_.emplace(f, c);
  }
  return out;
}

bool FracSeries::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e.e)
      if (x < 0) return true;
  return false;
}

void FracSeries::check_compatible(const FracSeries& b) const {
  if (!vars_ || !b.vars_) throw std::invalid_argument("uninitialized series");
  if (!vars_->same_as(*b.vars_)) throw std::invalid_argument("incompatible variable sets or gradings");
}

FracSeries& FracSeries::operator+=(const FracSeries& b) {
  check_compatible(b);
  Degree nb = std::min(bound_, b.bound_);
  if (nb < bound_) *this = truncated(nb);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& b) {
  check_compatible(b);
  Degree nb = std::min(bound_, b.bound_);
  if (nb < bound_) *this = truncated(nb);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

FracSeries FracSeries::operator-() const { return scaled(Cyclotomic(-1)); }

FracSeries operator*(const FracSeries& a, const FracSeries& b) { return mul(a, b, kExact); }

FracSeries mul(const FracSeries& a, const FracSeries& b, Degree cap) {
  a.check_compatible(b);
  const Degree va = a.valuation(), vb = b.valuation();
  Degree bound = std::min({deg_add(a.bound_, vb), deg_add(b.bound_, va), deg_add(a.bound_, b.bound_), cap});
  FracSeries out(a.vars_, bound);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const VarSet& vs = *a.vars_;
  std::vector<std::pair<Degree, const std::pair<const Exponents, Cyclotomic>*>> bs;
  bs.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bs.emplace_back(vs.degree(t.first), &t);
  std::stable_sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::unordered_map<Exponents, Cyclotomic, ExponentsHash> acc;
  for (const auto& [ea, ca] : a.terms_) {
    const Degree da = vs.degree(ea);
    for (const auto& [db, tb] : bs) {
      if (bound < kExact && da + db > bound) break;
      acc[ea + tb->first].add_mul(ca, tb->second);
    }
  }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.terms_.emplace(e, std::move(c));
  return out;
}

namespace {

void require_positive(const FracSeries& y, const char* what) {
  for (const auto& [e, c] : y.terms())
    if (y.degree(e) <= 0)
      throw std::domain_error(std::string(what) + ": offending term " + c.to_string() + "*" + y.monomial_to_string(e));
}

}  // namespace

FracSeries series_exp(const FracSeries& a, Degree bound) {
  require_positive(a, "exp requires zero constant term");
  const Degree B = std::min(a.bound(), bound);
  FracSeries result = FracSeries::constant(a.vars(), 1, B);
  if (a.is_zero()) return result;
  if (B >= kExact) throw std::domain_error("exp of an exact series needs a truncation bound");
  FracSeries term = FracSeries::constant(a.vars(), 1, B);
  for (long k = 1;; ++k) {
    term = mul(term, a, B).scaled(Cyclotomic(frac(1, k)));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

FracSeries series_log(const FracSeries& a) {
  FracSeries y = a - FracSeries::constant(a.vars(), 1);
  if (a.coefficient(Exponents{}) != Cyclotomic(1))
    throw std::domain_error("log requires constant term 1, got " + a.coefficient(Exponents{}).to_string());
  require_positive(y, "log requires constant term 1");
  const Degree B = a.bound();
  FracSeries result(a.vars(), B);
  if (y.is_zero()) return result;
  if (B >= kExact) throw std::domain_error("log of an exact series needs a truncation bound");
  FracSeries pw = FracSeries::constant(a.vars(), 1, B);
  for (long k = 1;; ++k) {
    pw = mul(pw, y, B);
    if (pw.is_zero()) break;
    result += pw.scaled(Cyclotomic(frac(k % 2 ? 1 : -1, k)));
  }
  return result;
}

namespace {

// a = c m (1 + y)
struct Leading {
  Exponents m;
  Cyclotomic c;
  FracSeries y;
};

Leading split_leading(const FracSeries& a) {
  if (a.is_zero()) throw std::domain_error("division by zero series");
  const Degree v = a.valuation();
  Leading L;
  int count = 0;
  for (const auto& [e, c] : a.terms())
    if (a.degree(e) == v) {
      L.m = e;
      L.c = c;
      ++count;
    }
  if (count != 1)
    throw std::domain_error("leading part is not a single monomial; series is not invertible in this grading");
  L.y = a.shifted(-L.m).scaled(L.c.inverse()) - FracSeries::constant(a.vars(), 1);
  return L;
}

}  // namespace

FracSeries series_inverse(const FracSeries& a, Degree bound) {
  Leading L = split_leading(a);
  const Degree dm = a.degree(L.m);
  const Degree by = std::min(L.y.bound(), deg_add(bound, dm));
  FracSeries inv = FracSeries::constant(a.vars(), 1, by);
  if (!L.y.is_zero()) {
    if (by >= kExact) throw std::domain_error("inverse of an exact non-monomial series needs a truncation bound");
    FracSeries neg = -L.y;
    FracSeries pw = FracSeries::constant(a.vars(), 1, by);
    for (;;) {
      pw = mul(pw, neg, by);
      if (pw.is_zero()) break;
      inv += pw;
    }
  } else {
    inv = FracSeries::constant(a.vars(), 1, kExact);
  }
  return inv.shifted(-L.m).scaled(L.c.inverse()).truncated(bound);
}

FracSeries series_pow(const FracSeries& a, long k, Degree bound) {
  if (k < 0) {
    // the inverse needs extra precision when its valuation is negative
    const Degree vinv = -a.valuation();
    const Degree need = vinv < 0 && bound < kExact ? bound - (-k - 1) * vinv : bound;
    return series_pow(series_inverse(a, need), -k, bound);
  }
  FracSeries result = FracSeries::constant(a.vars(), 1);
  FracSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base, bound);
    k >>= 1;
    if (k) base = mul(base, base, bound);
  }
  return result.truncated(bound);
}

FracSeries series_pow(const FracSeries& a, const Rational& r, Degree bound) {
  if (r.get_den() == 1) return series_pow(a, r.get_num().get_si(), bound);
  Leading L = split_leading(a);
  if (!L.c.is_one()) throw std::domain_error("branch-ambiguous substitution: rational power of non-unit coefficient");
  Exponents mr;
  for (int i = 0; i < kMaxVars; ++i) {
    Rational x = Rational(L.m[i]) * r;
    if (x.get_den() != 1) throw std::domain_error("rational power leaves the exponent lattice");
    mr[i] = static_cast<std::int32_t>(x.get_num().get_si());
  }
  const Degree dm = a.degree(mr);
  FracSeries body = FracSeries::constant(a.vars(), 1, kExact);
  if (!L.y.is_zero()) {
    Degree B = std::min(L.y.bound(), deg_add(bound, -dm));
    FracSeries lg = series_log((FracSeries::constant(a.vars(), 1) + L.y).truncated(B));
    body = series_exp(lg.scaled(Cyclotomic(r)), B);
  }
  return body.shifted(mr).truncated(bound);
}

FracSeries exp_monomial_series(const ExpMonomial& m, Degree bound) {
  Rational t = m.phase * m.order;
  if (t.get_den() != 1) throw std::domain_error("phase " + m.phase.get_str() + " is not a root of unity of order " +
                                                std::to_string(m.order));
  Cyclotomic z = m.order == 1 ? Cyclotomic(1) : Cyclotomic::root_of_unity(m.order, m.order, t.get_num().get_si());
  return series_exp(m.log, bound).scaled(z);
}

FracSeries series_substitute(const FracSeries& a, const std::map<std::string, Binding>& bindings, VarSetPtr target,
                             Degree bound) {
  const VarSet& src = *a.vars();
  const int S = src.scale(), T = target->scale();
  for (const auto& [name, b] : bindings) {
    if (!src.find(name)) throw std::invalid_argument("binding for unknown variable " + name);
    const FracSeries& img = std::holds_alternative<FracSeries>(b) ? std::get<FracSeries>(b) : std::get<ExpMonomial>(b).log;
    if (!img.vars()->same_as(*target)) throw std::invalid_argument("image of " + name + " not in target variables");
  }
  std::vector<int> slot(src.size(), -1);
  for (int i = 0; i < src.size(); ++i)
    if (!bindings.count(src.names()[i])) slot[i] = target->index(src.names()[i]);

  Degree B = bound;
  if (!a.is_exact()) {
    if (a.has_negative_exponents()) throw std::domain_error("cannot substitute into a truncated Laurent series");
    // tail degree > bound scales by the weakest image valuation per unit weight
    std::optional<Rational> kappa;
    for (int i = 0; i < src.size(); ++i) {
      if (src.weights()[i] == 0) continue;
      Rational v;
      auto it = bindings.find(src.names()[i]);
      if (it == bindings.end()) {
        v = Rational(target->weights()[slot[i]]);
      } else {
        if (!std::holds_alternative<FracSeries>(it->second))
          throw std::domain_error("substitution of a truncated series needs positive-valuation images");
        Degree iv = std::get<FracSeries>(it->second).valuation();
        v = iv >= kExact ? Rational(1000000) : frac(iv, T);
      }
      Rational k = v / src.weights()[i];
      if (!kappa || k < *kappa) kappa = k;
    }
    if (!kappa || *kappa <= 0) throw std::domain_error("substitution of a truncated series needs positive-valuation images");
    Rational lim = *kappa * Rational(a.bound()) * T / S;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lim.get_num_mpz_t(), lim.get_den_mpz_t());
    B = std::min(B, static_cast<Degree>(fl.get_si()));
  }

  std::map<std::pair<int, std::int32_t>, FracSeries> pow_cache;
  FracSeries out(target, B);
  for (const auto& [e, c] : a.terms()) {
    FracSeries term = FracSeries::constant(target, c);
    Exponents plain;
    Rational phase = 0;
    std::optional<FracSeries> lg;
    int order = 1;
    for (int i = 0; i < src.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] >= 0) {
        if ((static_cast<std::int64_t>(e[i]) * T) % S != 0) throw std::domain_error("exponent not representable in target");
        plain[slot[i]] += static_cast<std::int32_t>(static_cast<std::int64_t>(e[i]) * T / S);
        continue;
      }
      const Binding& b = bindings.at(src.names()[i]);
      Rational r = frac(e[i], S);
      if (std::holds_alternative<ExpMonomial>(b)) {
        const auto& em = std::get<ExpMonomial>(b);
        phase += r * em.phase;
        order = std::lcm(order, em.order);
        FracSeries part = em.log.scaled(Cyclotomic(r));
        lg = lg ? *lg + part : part;
        continue;
      }
      if (r.get_den() != 1) throw std::domain_error("branch-ambiguous substitution");
      auto key = std::make_pair(i, e[i]);
      auto it = pow_cache.find(key);
      if (it == pow_cache.end())
        it = pow_cache.emplace(key, series_pow(std::get<FracSeries>(b), r.get_num().get_si(), deg_add(B, 0))).first;
      term = mul(term, it->second, kExact);
    }
    if (lg) term = mul(term, exp_monomial_series(ExpMonomial{phase, *lg, order}, B), kExact);
    term = term.shifted(plain);
    out += term;
  }
  return out.truncated(B);
}

std::optional<Mismatch> first_mismatch(const FracSeries& a, const FracSeries& b, Degree upto) {
  if (!a.vars()->same_as(*b.vars())) throw std::invalid_argument("comparing series in different variables");
  if (a.bound() < upto || b.bound() < upto)
    throw std::domain_error("comparison window exceeds a truncation bound");
  std::vector<std::pair<Degree, Exponents>> keys;
  for (const auto* s : {&a, &b})
    for (const auto& [e, c] : s->terms()) {
      Degree d = s->degree(e);
      if (d <= upto) keys.emplace_back(d, e);
    }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& [d, e] : keys) {
    Cyclotomic x = a.coefficient(e), y = b.coefficient(e);
    if (!(x == y)) return Mismatch{e, d, x, y};
  }
  return std::nullopt;
}

std::string FracSeries::monomial_to_string(const Exponents& e) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < vars_->size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << vars_->names()[i];
    Rational x = frac(e[i], vars_->scale());
    if (x != 1) os << "^(" << x.get_str() << ")";
  }
  if (first) os << "1";
  return os.str();
}

std::string FracSeries::to_string() const {
  std::vector<std::pair<Degree, Exponents>> keys;
  for (const auto& [e, c] : terms_) keys.emplace_back(vars_->degree(e), e);
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, e] : keys) {
    if (!first) os << " + ";
    first = false;
    os << "(" << terms_.at(e).to_string() << ")*" << monomial_to_string(e);
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(deg > " << frac(bound_, vars_->scale()).get_str() << ")";
  return os.str();
}

}  // namespace loopvertex
