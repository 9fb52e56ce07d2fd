#include "aluffi/polynomial.hpp"

#include <algorithm>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

// Merges two descending term lists, scaling b by `scale` and shifting it by `shift`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Coefficient& scale,
                        const Monomial* shift, TermOrder order, std::size_t a_begin = 0) {
  std::vector<Term> out;
  out.reserve(a.size() - a_begin + b.size());
  std::size_t i = a_begin, j = 0;
  auto shifted = [&](std::size_t k) { return shift ? multiply(b[k].mono, *shift) : b[k].mono; };
  Monomial mb = j < b.size() ? shifted(j) : Monomial{};
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].mono, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].coef * scale, mb});
      if (++j < b.size()) mb = shifted(j);
    } else {
      Coefficient s = a[i].coef + b[j].coef * scale;
      if (sgn(s) != 0) out.push_back({std::move(s), mb});
      ++i;
      if (++j < b.size()) mb = shifted(j);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (j < b.size()) {
    out.push_back({b[j].coef * scale, mb});
    if (++j < b.size()) mb = shifted(j);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(PolyRing ring, std::vector<Term> terms) {
  const auto order = ring.order();
  for (const auto& t : terms)
    for (std::size_t i = ring.num_vars(); i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) throw PreconditionError("monomial uses a variable outside the ring");
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(PolyRing ring, const Coefficient& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.push_back({c, Monomial::one()});
  return p;
}

Polynomial Polynomial::variable(PolyRing ring, std::size_t i) {
  if (i >= ring.num_vars()) throw PreconditionError("variable index out of range");
  return monomial(ring, Monomial::variable(i));
}

Polynomial Polynomial::monomial(PolyRing ring, const Monomial& m, const Coefficient& c) {
  return from_terms(ring, {{c, m}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.deg == terms_.front().mono.deg; });
}

Polynomial Polynomial::reordered(TermOrder order) const {
  if (order == ring_.order()) return *this;
  return from_terms(ring_.with_order(order), terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  Polynomial p = *this;
  const Coefficient inv = 1 / leading_coefficient();
  for (auto& t : p.terms_) t.coef *= inv;
  return p;
}

void Polynomial::check_ring(const Polynomial& b) const {
  if (!(ring_ == b.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  check_ring(b);
  terms_ = merge(terms_, b.terms_, 1, nullptr, ring_.order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  check_ring(b);
  terms_ = merge(terms_, b.terms_, -1, nullptr, ring_.order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.coef * t.coef, multiply(s.mono, t.mono)});
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial Polynomial::mul_term(const Coefficient& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coef * c, multiply(t.mono, m)});
  return p;
}

Polynomial Polynomial::sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g) const {
  check_ring(g);
  Polynomial p(ring_);
  p.terms_ = merge(terms_, g.terms_, -c, &m, ring_.order());
  return p;
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> point) const {
  if (point.size() != ring_.num_vars()) throw PreconditionError("evaluation point has the wrong length");
  Coefficient sum = 0;
  for (const auto& t : terms_) {
    Coefficient v = t.coef;
    for (std::size_t i = 0; i < ring_.num_vars(); ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw PreconditionError("unknown arithmetic op");
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.ring().num_vars()) throw PreconditionError("derivative index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const auto e = t.mono.exp[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, static_cast<std::uint16_t>(e - 1));
    terms.push_back({t.coef * e, m});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial substitute_linear(const Polynomial& f, const QMatrix& a) {
  const auto& ring = f.ring();
  const std::size_t nv = ring.num_vars();
  if (a.rows() != nv || a.cols() != nv) throw PreconditionError("substitution matrix has the wrong shape");
  if (sgn(determinant(a)) == 0) throw PreconditionError("substitution matrix is singular");
  std::vector<Polynomial> images;
  images.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nv; ++j) terms.push_back({a(i, j), Monomial::variable(j)});
    images.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  Polynomial out(ring);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(ring, t.coef);
    for (std::size_t i = 0; i < nv; ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, unsigned d) {
  std::vector<Monomial> out;
  const std::size_t nv = ring.num_vars();
  Monomial m;
  // Enumerate exponent vectors recursively; sorted afterwards.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nv) {
      m.exp[var] = static_cast<std::uint16_t>(left);
      m.deg = d;
      out.push_back(m);
      m.exp[var] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, d);
  const auto order = ring.order();
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const std::size_t nv = f.ring().num_vars();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coef) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Coefficient mag = abs(t.coef);
    const bool unit = mag == 1;
    if (t.mono.deg == 0) {
      out += format_coefficient(mag);
    } else {
      if (!unit) out += format_coefficient(mag) + "*";
      out += format_monomial(t.mono, nv);
    }
  }
  return out;
}

}  // namespace aluffi
