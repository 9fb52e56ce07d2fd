#include <gtest/gtest.h>

#include <random>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/ideal.hpp"
#include "aluffi/kernels.hpp"
#include "aluffi/points.hpp"
#include "test_support.hpp"

namespace aluffi {
namespace {

using kernels::Isa;

std::vector<Monomial> random_monomials(std::mt19937_64& rng, std::size_t count, std::size_t vars, unsigned max_exp) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(testing::random_monomial(rng, vars, max_exp));
  return out;
}

// Plain loops over the inline helpers, independent of both kernel tables.
std::ptrdiff_t naive_find_divisor(const std::vector<Monomial>& ds, const Monomial& m) {
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (divides(ds[i], m)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::ptrdiff_t naive_find_multiple(const std::vector<Monomial>& ms, const Monomial& m) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (divides(m, ms[i])) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::size_t naive_count_standard(const std::vector<Monomial>& cs, const std::vector<Monomial>& ds) {
  std::size_t count = 0;
  for (const auto& c : cs) count += naive_find_divisor(ds, c) < 0 ? 1 : 0;
  return count;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::scalar};
  if (kernels::supported(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, FindDivisorAndMultiple) {
  const auto& t = kernels::table(GetParam());
  std::mt19937_64 rng(99);
  for (std::size_t len = 0; len < 40; ++len) {
    for (int rep = 0; rep < 20; ++rep) {
      const std::size_t vars = 1 + rng() % kMaxVars;
      const auto ds = random_monomials(rng, len, vars, 2);
      const Monomial m = testing::random_monomial(rng, vars, 3);
      EXPECT_EQ(t.find_divisor(ds, m), naive_find_divisor(ds, m));
      EXPECT_EQ(t.find_multiple(ds, m), naive_find_multiple(ds, m));
    }
  }
}

TEST_P(KernelEquivalence, LargeExponentsUseUnsignedCompare) {
  const auto& t = kernels::table(GetParam());
  Monomial small;
  small.set(0, 1);
  Monomial huge;
  huge.set(0, 40000);
  const std::vector<Monomial> ds{huge, small};
  EXPECT_EQ(t.find_divisor(ds, huge), 0);
  EXPECT_EQ(t.find_divisor(std::vector<Monomial>{huge}, small), -1);
  EXPECT_EQ(t.find_multiple(std::vector<Monomial>{small, huge}, huge), 1);
}

TEST_P(KernelEquivalence, CountStandard) {
  const auto& t = kernels::table(GetParam());
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t vars = 1 + rng() % 6;
    const auto cs = random_monomials(rng, rng() % 50, vars, 3);
    const auto ds = random_monomials(rng, rng() % 12, vars, 2);
    EXPECT_EQ(t.count_standard(cs, ds), naive_count_standard(cs, ds));
  }
}

TEST_P(KernelEquivalence, LcmBatch) {
  const auto& t = kernels::table(GetParam());
  std::mt19937_64 rng(13);
  for (std::size_t len = 0; len < 20; ++len) {
    const auto others = random_monomials(rng, len, kMaxVars, 60000);
    const Monomial m = testing::random_monomial(rng, kMaxVars, 60000);
    std::vector<Monomial> out(len);
    t.lcm_batch(m, others, out);
    for (std::size_t i = 0; i < len; ++i) {
      EXPECT_EQ(out[i], lcm(m, others[i]));
      EXPECT_EQ(out[i].deg, lcm(m, others[i]).deg);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Isas, KernelEquivalence, ::testing::ValuesIn(available()),
                         [](const auto& info) { return std::string(kernels::isa_name(info.param)); });

TEST(KernelDispatch, SelectSwitchesActiveTable) {
  const Isa before = kernels::active().isa;
  kernels::select(Isa::scalar);
  EXPECT_EQ(kernels::active().isa, Isa::scalar);
  kernels::select(before);
  EXPECT_EQ(kernels::active().isa, before);
  if (!kernels::supported(Isa::avx2)) EXPECT_THROW(kernels::table(Isa::avx2), PreconditionError);
}

TEST(KernelDispatch, GroebnerBasesAgreeAcrossIsas) {
  if (!kernels::supported(Isa::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  const Isa before = kernels::active().isa;
  std::mt19937_64 rng(4);
  const PointSet pts = testing::random_glp_points(rng, 3, 6);
  std::vector<std::vector<Polynomial>> bases;
  std::vector<std::size_t> hilbert;
  for (const Isa isa : {Isa::scalar, Isa::avx2}) {
    kernels::select(isa);
    const Ideal j = ideal_of_points(pts);
    bases.push_back(j.groebner().elements);
    hilbert.push_back(hilbert_function(j, 3));
  }
  kernels::select(before);
  EXPECT_EQ(bases[0], bases[1]);
  EXPECT_EQ(hilbert[0], hilbert[1]);
}

}  // namespace
}  // namespace aluffi
