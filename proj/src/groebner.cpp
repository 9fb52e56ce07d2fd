#include "aluffi/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "aluffi/errors.hpp"
#include "aluffi/kernels.hpp"

namespace aluffi {

namespace {

thread_local std::optional<unsigned> tls_degree_cap;

// Working copy of a polynomial whose head can be dropped in O(1).
struct Work {
  std::vector<Term> terms;
  std::size_t head = 0;
  bool empty() const { return head == terms.size(); }
};

// terms[head..] - scale * shift * g, dropping the (cancelling) leading terms.
void subtract_shifted(Work& w, const Coefficient& scale, const Monomial& shift, const Polynomial& g,
                      TermOrder order) {
  const auto& a = w.terms;
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() - w.head + b.size());
  std::size_t i = w.head + 1, j = 1;  // leading terms cancel by construction
  Monomial mb = j < b.size() ? multiply(b[j].mono, shift) : Monomial{};
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].mono, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({-scale * b[j].coef, mb});
      if (++j < b.size()) mb = multiply(b[j].mono, shift);
    } else {
      Coefficient s = a[i].coef - scale * b[j].coef;
      if (sgn(s) != 0) out.push_back({std::move(s), mb});
      ++i;
      if (++j < b.size()) mb = multiply(b[j].mono, shift);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (j < b.size()) {
    out.push_back({-scale * b[j].coef, mb});
    if (++j < b.size()) mb = multiply(b[j].mono, shift);
  }
  w.terms = std::move(out);
  w.head = 0;
}

// Divisor list with leading monomials packed contiguously for the kernels.
class Reducer {
 public:
  explicit Reducer(TermOrder order) : order_(order) {}

  void add(const Polynomial* g) {
    divisors_.push_back(g);
    lms_.push_back(g->leading_monomial());
  }

  Polynomial reduce(const Polynomial& f) const {
    const auto& kern = kernels::active();
    Work w{f.terms(), 0};
    std::vector<Term> remainder;
    while (!w.empty()) {
      const Term& lt = w.terms[w.head];
      const auto k = kern.find_divisor(lms_, lt.mono);
      if (k < 0) {
        remainder.push_back(lt);
        ++w.head;
        continue;
      }
      const Polynomial& g = *divisors_[static_cast<std::size_t>(k)];
      const Coefficient scale = lt.coef / g.leading_coefficient();
      subtract_shifted(w, scale, quotient(lt.mono, g.leading_monomial()), g, order_);
    }
    // remainder is already sorted descending and free of zeros.
    std::vector<Term> terms = std::move(remainder);
    return Polynomial::from_terms(f.ring(), std::move(terms));
  }

 private:
  TermOrder order_;
  std::vector<const Polynomial*> divisors_;
  std::vector<Monomial> lms_;
};

struct Pair {
  Monomial lcm;
  std::size_t i, j;  // i < j
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g) {
  Reducer r(f.ring().order());
  for (const auto& p : g) {
    if (!(p.ring() == f.ring())) throw RingMismatch("normal form divisor");
    if (!p.is_zero()) r.add(&p);
  }
  return r.reduce(f);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g, TermOrder order) {
  std::vector<Polynomial> reordered;
  reordered.reserve(g.size());
  for (const auto& p : g) reordered.push_back(p.reordered(order));
  return normal_form(f.reordered(order), reordered);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(1 / f.leading_coefficient(), quotient(l, f.leading_monomial())) -
         g.mul_term(1 / g.leading_coefficient(), quotient(l, g.leading_monomial()));
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order, const BuchbergerOptions& options) {
  const std::optional<unsigned> cap = options.degree_cap ? options.degree_cap : tls_degree_cap;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!basis.empty() && !(basis.front().ring().num_vars() == g.ring().num_vars()))
      throw RingMismatch("buchberger generators");
    Polynomial m = g.reordered(order).monic();
    if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(std::move(m));
  }
  if (basis.empty()) throw PreconditionError("buchberger: all generators are zero");

  // Pointers into `basis` must stay valid while the reducer holds them.
  basis.reserve(basis.size() * 8 + 64);
  Reducer reducer(order);
  for (const auto& g : basis) reducer.add(&g);

  auto cmp = [order](const Pair& a, const Pair& b) {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(cmp)> queue(cmp);
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j

  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    std::vector<Monomial> lcms(j);
    std::vector<Monomial> lms;
    lms.reserve(j);
    for (std::size_t i = 0; i < j; ++i) lms.push_back(basis[i].leading_monomial());
    kernels::active().lcm_batch(basis[j].leading_monomial(), lms, lcms);
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({lcms[i], i, j});
      pending[j][i] = 1;
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending[b][a] != 0;
  };

  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending[p.j][p.i] = 0;
    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    if (f.is_monomial() && g.is_monomial()) continue;  // S-polynomial is identically zero
    if (options.use_criteria) {
      if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == p.i || k == p.j) continue;
        chain = divides(basis[k].leading_monomial(), p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
      }
      if (chain) continue;
    }
    if (cap && p.lcm.deg > *cap) throw DegreeCapExceeded(p.lcm.deg, *cap);
    Polynomial h = reducer.reduce(s_polynomial(f, g));
    if (h.is_zero()) continue;
    if (basis.size() == basis.capacity()) {
      // Grow while keeping reducer pointers valid: rebuild the reducer.
      basis.reserve(basis.capacity() * 2);
      reducer = Reducer(order);
      for (const auto& b : basis) reducer.add(&b);
    }
    basis.push_back(h.monic());
    reducer.add(&basis.back());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis{order, std::move(basis), false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  const TermOrder order = gb.order;
  std::vector<Polynomial> elems;
  for (const auto& g : gb.elements)
    if (!g.is_zero()) elems.push_back(g.reordered(order).monic());
  std::stable_sort(elems.begin(), elems.end(), [order](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Keep the first element for each leading monomial not divisible by an earlier one.
  std::vector<Polynomial> minimal;
  std::vector<Monomial> lms;
  for (auto& g : elems) {
    if (kernels::active().find_divisor(lms, g.leading_monomial()) >= 0) continue;
    lms.push_back(g.leading_monomial());
    minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Reducer r(order);
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) r.add(&minimal[k]);
    reduced.push_back(r.reduce(minimal[i]).monic());
  }
  std::reverse(reduced.begin(), reduced.end());
  return GroebnerBasis{order, std::move(reduced), true};
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  if (!gb.reduced) throw PreconditionError("initial_ideal requires a reduced Groebner basis");
  return gb.leading_monomials();
}

bool is_groebner_basis(std::span<const Polynomial> g) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : g)
    if (!p.is_zero()) nonzero.push_back(p);
  for (std::size_t j = 0; j < nonzero.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(nonzero[i], nonzero[j]), nonzero).is_zero()) return false;
  return true;
}

ScopedDegreeCap::ScopedDegreeCap(std::optional<unsigned> cap) : previous_(tls_degree_cap) {
  tls_degree_cap = cap;
}

ScopedDegreeCap::~ScopedDegreeCap() { tls_degree_cap = previous_; }

std::optional<unsigned> ScopedDegreeCap::current() { return tls_degree_cap; }

}  // namespace aluffi
