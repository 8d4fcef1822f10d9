#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "phin/characters.hpp"
#include "phin/fock.hpp"

using namespace phin;

namespace {

// Independent closed form: the partition basis is orthogonal and
// <lambda|lambda> = prod_m mult_m! * prod_i Pi(lambda_i).
Rational diagonal_norm(int degree, const PartitionState& state) {
  Rational norm = 1;
  std::map<int, int> multiplicity;
  for (int part : state) {
    norm *= structure_pi(degree, part);
    multiplicity[part] += 1;
  }
  for (const auto& [part, count] : multiplicity) {
    (void)part;
    for (int k = 2; k <= count; ++k) norm *= k;
  }
  return norm;
}

}  // namespace

TEST_CASE("level bases enumerate partitions in reverse-lexicographic order") {
  CHECK(level_basis(0) == std::vector<PartitionState>{{}});
  CHECK(level_basis(2) == std::vector<PartitionState>{{2}, {1, 1}});
  CHECK(level_basis(4) ==
        std::vector<PartitionState>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const std::vector<Integer> p = partition_series(12);
  for (int level = 0; level <= 12; ++level) {
    CHECK(Integer(level_basis(level).size()) == p[level]);
  }
  CHECK_THROWS_AS(level_basis(-1), std::invalid_argument);
}

TEST_CASE("gram matrix matches the diagonal closed form") {
  for (int degree = 0; degree <= 2; ++degree) {
    for (int level = 0; level <= 6; ++level) {
      const GramMatrix gram = gram_matrix(degree, level);
      const auto basis = level_basis(level);
      REQUIRE(gram.entries.rows == basis.size());
      for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const Rational expected = r == c ? diagonal_norm(degree, basis[r]) : 0;
          CAPTURE(degree);
          CAPTURE(level);
          CHECK(gram.entries.at(r, c) == expected);
        }
      }
    }
  }
}

TEST_CASE("gram matrix is independent of the central value q") {
  const GramMatrix at_zero = gram_matrix(1, 4, Rational(0));
  const GramMatrix at_two = gram_matrix(1, 4, make_rational(2, 1));
  CHECK(at_zero.entries.data == at_two.entries.data);
}

TEST_CASE("parallel gram assembly agrees with the serial reference") {
  for (const auto& [degree, level] : std::vector<std::pair<int, int>>{{0, 7}, {1, 6}, {2, 7}}) {
    const GramMatrix parallel = gram_matrix(degree, level);
    const GramMatrix serial = gram_matrix_serial(degree, level);
    CHECK(parallel.entries.data == serial.entries.data);
  }
}

TEST_CASE("level-2 gram for the first derivative is [[6,0],[0,0]]") {
  const GramMatrix gram = gram_matrix(1, 2);
  REQUIRE(gram.basis == std::vector<PartitionState>{{2}, {1, 1}});
  CHECK(gram.entries.at(0, 0) == 6);
  CHECK(gram.entries.at(0, 1) == 0);
  CHECK(gram.entries.at(1, 0) == 0);
  CHECK(gram.entries.at(1, 1) == 0);
}

TEST_CASE("apply_mode realizes the commutation relations") {
  const StructureConstants constants{1, Rational(0)};
  const std::vector<FockVector> probes = {
      basis_vector({}),
      basis_vector({2}),
      basis_vector({3, 2}) + basis_vector({2, 2, 1}) * make_rational(2, 3),
      basis_vector({4, 1}) - basis_vector({3, 1, 1}),
  };
  for (const auto& v : probes) {
    for (int m = -4; m <= 4; ++m) {
      for (int mp = -4; mp <= 4; ++mp) {
        if (m == 0 || mp == 0) continue;
        const FockVector left = apply_mode(m, apply_mode(mp, v, constants), constants);
        const FockVector right = apply_mode(mp, apply_mode(m, v, constants), constants);
        FockVector expected;
        if (m + mp == 0) expected = v * structure_pi(1, m);
        CAPTURE(m);
        CAPTURE(mp);
        CHECK(left - right == expected);
      }
    }
  }
}

TEST_CASE("apply_mode matches vacuum expectation values") {
  // <mu | a_m | lambda> computed through the Fock action must equal the
  // expectation value of the corresponding flat word.
  const StructureConstants constants{2, Rational(0)};
  for (int m : {-3, -1, 1, 3, 4}) {
    for (const auto& lambda : level_basis(4)) {
      const FockVector image = apply_mode(m, basis_vector(lambda), constants);
      const int image_level = 4 - m;
      if (image_level < 0) {
        CHECK(image.is_zero());
        continue;
      }
      for (const auto& mu : level_basis(image_level)) {
        Word word;
        for (auto it = mu.rbegin(); it != mu.rend(); ++it) word.push_back(*it);
        word.push_back(m);
        for (int part : lambda) word.push_back(-part);
        const Rational direct = vacuum_expectation(word, constants);
        const Rational via_fock = inner_product(basis_vector(mu), image, constants);
        CAPTURE(m);
        CHECK(via_fock == direct);
      }
    }
  }
}

TEST_CASE("zero mode acts as multiplication by q") {
  const StructureConstants constants{1, make_rational(5, 7)};
  const FockVector v = basis_vector({3, 1});
  CHECK(apply_mode(0, v, constants) == v * make_rational(5, 7));
}

TEST_CASE("annihilators kill the vacuum and vanish inside the zero window") {
  const StructureConstants constants{2, Rational(0)};
  CHECK(apply_mode(3, basis_vector({}), constants).is_zero());
  // Pi(2) = 0 for degree 2, so a_2 annihilates everything.
  CHECK(apply_mode(2, basis_vector({2, 2, 1}), constants).is_zero());
}

TEST_CASE("null reports identify the radical") {
  const NullReport report = null_report(1, 2);
  CHECK(report.dimension == 2);
  CHECK(report.rank == 1);
  REQUIRE(report.null_basis.size() == 1);
  CHECK(report.null_basis[0] == basis_vector({1, 1}));

  for (int level = 1; level <= 2; ++level) {
    const NullReport collapsed = null_report(2, level);
    CHECK(collapsed.rank == 0);
    CHECK(collapsed.null_basis.size() == collapsed.dimension);
  }

  const NullReport full = null_report(0, 5);
  CHECK(full.rank == full.dimension);
  CHECK(full.null_basis.empty());
}

TEST_CASE("effective multiplicities count partitions into large parts") {
  const std::vector<std::size_t> degree1 = {1, 0, 1, 1, 2, 2, 4};
  for (int level = 0; level <= 6; ++level) {
    CHECK(effective_multiplicity(1, level) == degree1[level]);
  }
  const std::vector<std::size_t> degree2 = {1, 0, 0, 1, 1, 1, 2, 2, 3};
  for (int level = 0; level <= 8; ++level) {
    CHECK(effective_multiplicity(2, level) == degree2[level]);
  }
  CHECK(effective_multiplicity(0, 6) == 11);  // all partitions survive
}

TEST_CASE("moebius generators satisfy the sl(2) relations") {
  const StructureConstants constants{1, Rational(0)};
  const FockVector state = basis_vector({2});

  // [L_1, L_{-1}] = 2 L_0 on a state clear of the collapsed window.
  const FockVector bracket =
      mobius_apply(1, mobius_apply(-1, state, constants), constants) -
      mobius_apply(-1, mobius_apply(1, state, constants), constants);
  CHECK(bracket == mobius_apply(0, state, constants) * Rational(2));

  // [L_0, L_{+-1}] = -+ L_{+-1}.
  for (int k : {-1, 1}) {
    const FockVector lhs =
        mobius_apply(0, mobius_apply(k, state, constants), constants) -
        mobius_apply(k, mobius_apply(0, state, constants), constants);
    const FockVector rhs = mobius_apply(k, state, constants) * Rational(-k);
    CHECK(lhs == rhs);
  }

  // L_{+-1} annihilate the vacuum.
  CHECK(mobius_apply(1, basis_vector({}), constants).is_zero());
  CHECK(mobius_apply(-1, basis_vector({}), constants).is_zero());

  CHECK_THROWS_AS(mobius_apply(2, state, constants), std::invalid_argument);
}

TEST_CASE("sl(2) defect on the collapsed window is a null state") {
  // On |{1}> the raw bracket acquires a defect supported on part-1 states;
  // those states have zero Gram norm for degree >= 1, so the relation holds
  // in the Hilbert space the Gram form defines.
  for (int degree = 1; degree <= 3; ++degree) {
    const StructureConstants constants{degree, Rational(0)};
    const FockVector state = basis_vector({1});
    const FockVector defect =
        mobius_apply(1, mobius_apply(-1, state, constants), constants) -
        mobius_apply(-1, mobius_apply(1, state, constants), constants) -
        mobius_apply(0, state, constants) * Rational(2);
    CHECK(defect == state * Rational(-degree * (degree + 1)));
    CHECK(inner_product(defect, defect, constants) == 0);
    for (const auto& mu : level_basis(1)) {
      CHECK(inner_product(basis_vector(mu), defect, constants) == 0);
    }
  }
}

TEST_CASE("fock vector bookkeeping") {
  FockVector v;
  v.add_term({2, 1}, make_rational(1, 2));
  v.add_term({2, 1}, make_rational(-1, 2));
  CHECK(v.is_zero());
  CHECK(v.homogeneous_level() == 0);

  v.add_term({3}, 1);
  CHECK(v.homogeneous_level() == 3);
  v.add_term({2, 2}, 1);
  CHECK(v.homogeneous_level() == std::nullopt);
}
