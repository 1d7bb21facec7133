#include <doctest.h>

#include "helpers.hpp"
#include "orbidt/dt_series.hpp"
#include "orbidt/transfer.hpp"

using namespace orbidt;

TEST_CASE("raising operator fans out over horizontal strips") {
  StateVector st = vacuum_state(1, 3, 3);
  apply_gamma_minus(st, GammaArg{QKey{1}, 1});
  // From the vacuum only single rows appear, with amplitude (q c)^v.
  REQUIRE(st.amps.size() == 4);
  CHECK(st.amps.at(Partition2D{}).coeff(QKey{0}).is_one());
  CHECK(st.amps.at(Partition2D{2}).coeff(QKey{2}) == CPoly::monomial(2));
  CHECK(st.amps.at(Partition2D{3}).coeff(QKey{3}) == CPoly::monomial(3));
  CHECK(st.amps.count(Partition2D{1, 1}) == 0);

  // The size cap bounds the fan-out.
  StateVector small = vacuum_state(1, 5, 2);
  apply_gamma_minus(small, GammaArg{QKey{1}, 0});
  CHECK(small.amps.size() == 3);
}

TEST_CASE("lowering operator fixes the vacuum") {
  StateVector st = vacuum_state(1, 3, 3);
  apply_gamma_plus(st, GammaArg{QKey{1}, 0});
  REQUIRE(st.amps.size() == 1);
  CHECK(st.amps.at(Partition2D{}).coeff(QKey{0}).is_one());
}

TEST_CASE("half vertex operators satisfy the pairing identity") {
  // <0| G_+(x) G_-(y) |0> = 1/(1 - xy).
  StateVector st = vacuum_state(2, 4, 4);
  apply_gamma_minus(st, GammaArg{QKey{0, 1}, 0});
  apply_gamma_plus(st, GammaArg{QKey{1, 0}, 0});
  const auto amp = vacuum_amplitude(st);
  CHECK(amp.coeff(QKey{0, 0}).is_one());
  CHECK(amp.coeff(QKey{1, 1}).is_one());
  CHECK(amp.coeff(QKey{2, 2}).is_one());
  CHECK(amp.coeff(QKey{1, 0}).is_zero());
  CHECK(amp.coeff(QKey{2, 1}).is_zero());
}

TEST_CASE("diagonal operators weight per box") {
  StateVector st = vacuum_state(1, 6, 6, Partition2D{2, 1});
  apply_diag(st, QKey{1}, 0);
  CHECK(st.amps.at(Partition2D{2, 1}).coeff(QKey{3}).is_one());
  apply_diag(st, QKey{0}, -1);
  CHECK(st.amps.at(Partition2D{2, 1}).coeff(QKey{3}) == CPoly::monomial(-3));
  // K_+ undoes K_-.
  apply_diag(st, QKey{0}, 1);
  CHECK(st.amps.at(Partition2D{2, 1}).coeff(QKey{3}).is_one());
}

TEST_CASE("zero argument makes the operator the identity") {
  StateVector st = vacuum_state(1, 3, 3);
  apply_gamma_minus(st, GammaArg{QKey{1}, 0});
  const auto before = st.amps;
  apply_gamma_minus(st, GammaArg{QKey{1}, 0, true});
  apply_gamma_plus(st, GammaArg{QKey{1}, 0, true});
  CHECK(st.amps == before);
}

TEST_CASE("limit series from the operator walk") {
  const auto z1 = z_limit(1, 2);
  CHECK(z1.coeff(QKey{0}) == CRational::one());
  CHECK(z1.coeff(QKey{1}) == CRational(CPoly::monomial(1)));
  CHECK(z1.coeff(QKey{2}) ==
        CRational(CPoly::monomial(2, 2) + CPoly::one()));

  // Cross-check against the fixed-point enumeration route.
  const auto z2 = z_limit(2, 2);
  const auto byindex = to_crational(z_index_limit(colored_partitions(2, 2), 2, 2));
  CHECK(z2 == byindex);
}

TEST_CASE("deepening the walk preserves settled coefficients") {
  const auto shallow = z_limit(2, 2);
  const auto deep = z_limit(2, 3);
  for (const auto& [k, v] : shallow.coeffs()) CHECK(deep.coeff(k) == v);
  for (const auto& [k, v] : deep.coeffs())
    if (key_total(k) <= 2) CHECK(shallow.coeff(k) == v);
}

TEST_CASE("plain walk reproduces the box counts") {
  const auto counts = transfer_plain(5);
  const std::vector<Int> want{1, 1, 3, 6, 13, 24};
  CHECK(counts == want);
}

TEST_CASE("commutation checks hold at small degree") {
  CHECK(check_gamma_commutation(GammaArg{QKey{1, 0}, 0}, GammaArg{QKey{0, 1}, 0}, 3));
  CHECK(check_A_commutation(1, 3));
  CHECK(check_A_commutation(2, 2));
}
