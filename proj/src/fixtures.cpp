#include "reflex/fixtures.hpp"

#include <stdexcept>

namespace reflex {

namespace {

Matrix unit2(std::size_t i, std::size_t j) { return Matrix::unit(2, 2, i, j); }
Matrix unit3(std::size_t i, std::size_t j) { return Matrix::unit(3, 3, i, j); }

ProblemFile pattern(std::size_t h, const std::vector<Matrix>& basis) {
  ProblemFile p;
  p.m = OperatorSpace::span(h, h, basis);
  return p;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"zero",  "full",  "scalars",   "unit-e12",
                                                 "jordan", "diag2", "uppertri3", "strict-upper3"};
  return names;
}

ProblemFile fixture(const std::string& name) {
  if (name == "zero") return pattern(2, {});
  if (name == "full") return pattern(2, {unit2(0, 0), unit2(0, 1), unit2(1, 0), unit2(1, 1)});
  if (name == "scalars") return pattern(2, {Matrix::identity(2)});
  if (name == "unit-e12") return pattern(2, {unit2(0, 1)});
  if (name == "jordan") {
    ProblemFile p = pattern(2, {Matrix::identity(2), unit2(0, 1)});
    // Lat(A_M) and Lat(B_M)^perp of span{I, E12}, complete by hand check:
    // the only line invariant under E12 is span{e1}, under E21 span{e2}.
    SuppliedLattices lattices;
    lattices.lat_a = {Subspace::zero(2), Subspace::coordinate(2, 0b01), Subspace::full(2)};
    lattices.lat_b_perp = {Subspace::zero(2), Subspace::coordinate(2, 0b10), Subspace::full(2)};
    p.supplied = std::move(lattices);
    return p;
  }
  if (name == "diag2") return pattern(2, {unit2(0, 0), unit2(1, 1)});
  if (name == "uppertri3")
    return pattern(3, {unit3(0, 0), unit3(0, 1), unit3(0, 2), unit3(1, 1), unit3(1, 2), unit3(2, 2)});
  if (name == "strict-upper3") return pattern(3, {unit3(0, 1), unit3(0, 2), unit3(1, 2)});
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace reflex
