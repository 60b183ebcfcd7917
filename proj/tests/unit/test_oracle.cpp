#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "kring/characters.hpp"
#include "kring/oracle/character_table.hpp"
#include "kring/wreath.hpp"
#include "mackey.hpp"
#include "wreath_bridge.hpp"

using namespace kring;
using namespace kring::testing;
using oracle::ClassFunction;
using oracle::PermGroup;
using oracle::Value;

namespace {

std::vector<Value> sorted_values(const ClassFunction& f) {
  auto v = f.values();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Value> ints(std::initializer_list<int> list) {
  std::vector<Value> v;
  for (int x : list) v.emplace_back(x);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(PermGroup, SmallGroups) {
  const auto s3 = oracle::build_symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.classes().size(), 3u);
  const auto w22 = oracle::build_wreath(2, 2);
  EXPECT_EQ(w22.order(), 8u);
  EXPECT_EQ(w22.classes().size(), 5u);
  EXPECT_EQ(oracle::build_young(2, 1).order(), 2u);
  EXPECT_TRUE(w22.is_subgroup_of(oracle::build_symmetric(4)));
  EXPECT_EQ(oracle::build_wreath(2, 3).order(), 48u);
  EXPECT_EQ(oracle::build_wreath(3, 2).order(), 72u);
}

TEST(PermGroup, ClassSizesSumToOrder) {
  for (const auto& g : {oracle::build_symmetric(5), oracle::build_wreath(2, 3), oracle::build_young({2, 1, 2})}) {
    std::size_t total = 0;
    for (const auto& c : g.classes()) total += c.size;
    EXPECT_EQ(total, g.order());
    EXPECT_EQ(g.classes().front().representative, oracle::identity_perm(g.degree()));
  }
}

TEST(PermGroup, CompositionConvention) {
  const oracle::Perm a{1, 2, 0};
  const oracle::Perm b{1, 0, 2};
  // (a * b)(0) = a(b(0)) = a(1) = 2.
  EXPECT_EQ(oracle::compose(a, b), (oracle::Perm{2, 1, 0}));
  EXPECT_EQ(oracle::compose(a, oracle::inverse(a)), oracle::identity_perm(3));
  EXPECT_EQ(oracle::cycle_type(a), (std::vector<int>{3}));
}

TEST(PermGroup, OrderGuard) {
  EXPECT_THROW(oracle::build_symmetric(9), oracle::OrderGuardError);
  EXPECT_THROW(PermGroup(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), oracle::OrderGuardError);
}

TEST(PermGroup, CosetsPartitionTheGroup) {
  const auto g = oracle::build_symmetric(5);
  const auto h = oracle::build_young(2, 3);
  EXPECT_EQ(oracle::left_coset_representatives(g, h).size(), 10u);
  // Double cosets S_{2,3} \ S_5 / S_{2,3}: one per overlap size.
  EXPECT_EQ(oracle::double_coset_representatives(g, h, h).size(), 3u);
  const auto k = oracle::build_young(4, 1);
  EXPECT_EQ(oracle::double_coset_representatives(g, k, h).size(), 2u);
}

TEST(Induced, Examples) {
  const auto& s2 = *oracle::symmetric_table(2).group;
  const PermGroup e(2, {});
  EXPECT_EQ(oracle::induce(ClassFunction::constant(e, 1), s2).values(), (std::vector<Value>{2, 0}));

  const auto& s3 = *oracle::symmetric_table(3).group;
  const auto y21 = oracle::build_young(2, 1);
  const auto ind = oracle::induce(ClassFunction::constant(y21, 1), s3);
  EXPECT_EQ(sorted_values(ind), ints({3, 1, 0}));
  EXPECT_EQ(ind, oracle_symmetric_character({3}) + oracle_symmetric_character({2, 1}));

  const auto w22 = oracle::build_wreath(2, 2);
  const auto ind4 = oracle::induce(ClassFunction::constant(w22, 1), *oracle::symmetric_table(4).group);
  EXPECT_EQ(ind4, oracle_symmetric_character({4}) + oracle_symmetric_character({2, 2}));
  EXPECT_EQ(ind4, oracle::coset_permutation_character(*oracle::symmetric_table(4).group, w22));
}

TEST(Induced, RejectsNonSubgroups) {
  const auto s3 = oracle::build_symmetric(3);
  const auto w = oracle::build_wreath(2, 2);
  EXPECT_THROW(oracle::induce(ClassFunction::constant(w, 1), s3), std::invalid_argument);
}

TEST(PermutationCharacter, Examples) {
  EXPECT_EQ(sorted_values(oracle::permutation_character(oracle::build_symmetric(3))), ints({3, 1, 0}));
  EXPECT_EQ(sorted_values(oracle::permutation_character(oracle::build_wreath(2, 2))), ints({4, 2, 0, 0, 0}));
  const auto s4 = oracle::build_symmetric(4);
  EXPECT_EQ(oracle::coset_permutation_character(s4, s4), ClassFunction::constant(s4, 1));
  EXPECT_EQ(oracle::inner(oracle::permutation_character(s4), ClassFunction::constant(s4, 1)), 1);
}

TEST(IrreducibleTable, SmallGroups) {
  const auto& t3 = oracle::symmetric_table(3);
  std::vector<Value> dims;
  for (const auto& chi : t3.characters) dims.push_back(chi.degree());
  EXPECT_EQ(dims, (std::vector<Value>{1, 2, 1}));

  const auto& t2 = oracle::symmetric_table(2);
  ASSERT_EQ(t2.characters.size(), 2u);
  EXPECT_EQ(sorted_values(t2.characters[0]), ints({1, 1}));
  EXPECT_EQ(sorted_values(t2.characters[1]), ints({1, -1}));

  const auto& d8 = oracle::wreath_table(2, 2);
  ASSERT_EQ(d8.characters.size(), 5u);
  int two = 0;
  for (const auto& chi : d8.characters) {
    EXPECT_EQ(oracle::inner(chi, chi), 1);
    two += chi.degree() == 2;
  }
  EXPECT_EQ(two, 1);
}

TEST(IrreducibleTable, StallsWithoutEnoughSeeds) {
  const auto s3 = oracle::build_symmetric(3);
  EXPECT_THROW(oracle::irreducible_table(s3, {ClassFunction::constant(s3, 1)}), std::runtime_error);
}

TEST(IrreducibleTable, SymmetricMatchesMurnaghanNakayama) {
  for (int n = 1; n <= 6; ++n) {
    const auto& t = oracle::symmetric_table(n);
    ASSERT_EQ(t.characters.size(), partitions_of(n).size());
    std::set<Partition> seen;
    for (std::size_t i = 0; i < t.characters.size(); ++i) {
      const Partition label(t.labels[i]);
      for (const auto& cls : t.group->classes())
        ASSERT_EQ(t.characters[i].at(cls.representative), Value(mn_character(label, cycle_type_of(cls.representative))))
            << label;
      seen.insert(label);
    }
    EXPECT_EQ(seen.size(), t.characters.size());
  }
}

TEST(IrreducibleTable, WreathMatchesLibrary) {
  for (auto [l, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {1, 3}, {3, 1}}) {
    const auto& t = oracle::wreath_table(l, k);
    std::set<MultiPartition, MultiPartitionOrder> seen;
    for (const auto& chi : t.characters) {
      auto phi = match_irreducible(chi, l, k);
      ASSERT_TRUE(phi.has_value()) << l << "," << k;
      seen.insert(*phi);
    }
    EXPECT_EQ(seen.size(), multipartitions(l, k).size());
    EXPECT_EQ(t.characters.size(), t.group->classes().size());
  }
}

TEST(FrobeniusReciprocity, YoungAndWreathSubgroups) {
  auto check = [](const PermGroup& h, const std::vector<ClassFunction>& sub_chars, int n) {
    const auto& t = oracle::symmetric_table(n);
    for (const auto& f : sub_chars) {
      const auto up = oracle::induce(f, *t.group);
      for (const auto& chi : t.characters)
        ASSERT_EQ(oracle::inner(up, chi), oracle::inner(f, oracle::restrict_to(chi, h)));
    }
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 5; ++j) {
      const auto young = oracle::build_young(i, j);
      std::vector<ClassFunction> chars;
      for (const auto& a : partitions_of(i))
        for (const auto& b : partitions_of(j)) chars.push_back(young_character(young, a, b));
      check(young, chars, i + j);
    }
  for (auto [l, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto& t = oracle::wreath_table(l, k);
    check(*t.group, t.characters, l * k);
  }
}

// Res_K Ind_H^G f = sum over K s H of Ind_{K & sHs^-1}^K (f^s restricted),
// with G = S_l x S_{nl}, H the diagonal S_n wr S_l and K = S_i x S_j x S_{nl}.
TEST(Mackey, DiagonalWreathAgainstYoungSubgroups) {
  Rng rng(0x5eed0601);
  for (int l = 2; l <= 4; ++l)
    for (int n = 1; n * l <= 6; ++n)
      for (int i = 1; i < l; ++i) {
        const auto r = mackey_instance(n, i, l - i, rng);
        EXPECT_TRUE(r.intersection_order_ok) << n << " " << i << " " << l - i;
        EXPECT_TRUE(r.identity_ok) << n << " " << i << " " << l - i;
        EXPECT_GT(r.double_cosets, 0u);
      }
}
