// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "liepool/dis.hpp"
#include "liepool/lie.hpp"
#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"
#include "oracle.hpp"

using liepool::Complex;
using liepool::GradientClass;
using liepool::PauliKey;
using liepool::PauliSum;
using liepool::PauliTerm;
using liepool::StateVector;

namespace {

PauliTerm word(std::string_view w, Complex c = 1.0) {
  return PauliTerm::from_string(w, c);
}

std::size_t total_members(const std::vector<GradientClass>& classes) {
  std::size_t n = 0;
  for (const GradientClass& c : classes) n += c.members.size();
  return n;
}

}  // namespace

TEST_CASE("a diagonal Hamiltonian has an empty direct interaction set") {
  PauliSum h(3);
  h.add(word("ZII", Complex{0.7, 0.0}));
  h.add(word("ZZI", Complex{-1.3, 0.0}));
  h.add(word("IIZ", Complex{0.2, 0.0}));
  h.add(PauliTerm::identity(3, Complex{4.0, 0.0}));
  const StateVector ref = StateVector::basis_state(3, 5);
  CHECK(liepool::dis_classes(h, ref).empty());
}

TEST_CASE("a single x term yields one class containing y") {
  const PauliSum h = PauliSum::from_term(word("X"));
  const StateVector ref = StateVector::basis_state(1, 0);
  const auto classes = liepool::dis_classes(h, ref);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].magnitude == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(classes[0].members.size() == 1);
  CHECK(classes[0].members[0].key() == word("Y").key());
  CHECK(classes[0].representative.key() == word("Y").key());
  CHECK(classes[0].representative.coeff == Complex{1.0, 0.0});
}

TEST_CASE("classes sort by magnitude and pick the first key as representative") {
  PauliSum h(2);
  h.add(word("XI", Complex{2.0, 0.0}));
  h.add(word("IX", Complex{0.5, 0.0}));
  const StateVector ref = StateVector::basis_state(2, 0);
  const auto classes = liepool::dis_classes(h, ref);
  REQUIRE(classes.size() == 2);

  CHECK(classes[0].magnitude == Catch::Approx(4.0).margin(1e-12));
  REQUIRE(classes[0].members.size() == 2);
  CHECK(classes[0].representative.key() == word("YI").key());
  CHECK(classes[0].members[0].key() == word("YI").key());
  CHECK(classes[0].members[1].key() == word("YZ").key());

  CHECK(classes[1].magnitude == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(classes[1].members.size() == 2);
  CHECK(classes[1].representative.key() == word("IY").key());
  CHECK(classes[1].members[1].key() == word("ZY").key());
}

TEST_CASE("dis_classes agrees with the exhaustive dense oracle") {
  std::mt19937_64 rng(127);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const PauliSum h = fixtures::random_hermitian(rng, n, 8);
    const std::uint64_t index = rng() & ((std::uint64_t{1} << n) - 1);
    const StateVector ref = StateVector::basis_state(n, index);

    const auto classes = liepool::dis_classes(h, ref);
    const auto dense = oracle::dense_dis(h, ref, liepool::kGradEps);

    // Same membership, same magnitudes, each term in exactly one class.
    std::map<PauliKey, double> flat;
    for (const GradientClass& c : classes) {
      for (const PauliTerm& m : c.members) {
        CHECK(flat.emplace(m.key(), c.magnitude).second);
      }
    }
    REQUIRE(flat.size() == dense.size());
    for (const auto& [key, mag] : dense) {
      const auto it = flat.find(key);
      REQUIRE(it != flat.end());
      CHECK(it->second == Catch::Approx(mag).margin(1e-9));
    }

    // Descending magnitudes, gaps larger than the grouping width.
    for (std::size_t c = 1; c < classes.size(); ++c) {
      CHECK(classes[c - 1].magnitude - classes[c].magnitude >
            liepool::kGradEps);
    }
  }
}

TEST_CASE("class members commute and span an abelian subalgebra") {
  std::mt19937_64 rng(131);
  for (int rep = 0; rep < 6; ++rep) {
    const PauliSum h = fixtures::random_hermitian(rng, 4, 10);
    const StateVector ref =
        StateVector::basis_state(4, rng() & 15);
    for (const GradientClass& cls : liepool::dis_classes(h, ref)) {
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
          CHECK(liepool::commutes(cls.members[i], cls.members[j]));
        }
      }
      // Commuting unit products generate an abelian algebra of their own size.
      std::vector<PauliSum> gens;
      for (const PauliTerm& m : cls.members) {
        PauliTerm t = m;
        t.coeff = Complex{0.0, 1.0};
        gens.push_back(PauliSum::from_term(t));
      }
      const liepool::Subalgebra s = liepool::close(gens);
      CHECK(s.dim() == cls.members.size());
      CHECK(s.structure.empty());
    }
  }
}

TEST_CASE("dis_classes validates its inputs") {
  const PauliSum h1 = PauliSum::from_term(word("X"));
  CHECK_THROWS_AS(
      liepool::dis_classes(h1, StateVector::basis_state(2, 0)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      liepool::dis_classes(PauliSum::from_term(word("X", Complex{0.0, 1.0})),
                           StateVector::basis_state(1, 0)),
      std::invalid_argument);

  // Reference must be a computational-basis state.
  StateVector plus(1);
  plus[0] = plus[1] = Complex{std::sqrt(0.5), 0.0};
  CHECK_THROWS_AS(liepool::dis_classes(h1, plus), std::invalid_argument);

  // Cap on the exhaustive enumeration.
  PauliSum wide(liepool::kMaxDisQubits + 1);
  wide.add(PauliTerm::single(liepool::kMaxDisQubits + 1, 0, 'X'));
  CHECK_THROWS_AS(
      liepool::dis_classes(wide, StateVector::basis_state(
                                     liepool::kMaxDisQubits + 1, 0)),
      std::invalid_argument);

  // A basis state with a phase is still a basis state.
  StateVector phased = StateVector::basis_state(1, 0);
  phased *= Complex{0.0, 1.0};
  CHECK_NOTHROW(liepool::dis_classes(h1, phased));
}
