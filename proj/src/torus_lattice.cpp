#include "nfgmc/torus_lattice.hpp"

#include <string>

#include "nfgmc/errors.hpp"

namespace nfgmc {

TorusLattice::TorusLattice(int side) : side_(side), n_sites_(side * side) {
  if (side < 2)
    throw LatticeTooSmall("side must be >= 2 (L=1 creates self-loops), got " +
                          std::to_string(side));
  const int L = side_, N = n_sites_;
  auto wrap = [L](int r, int c) { return ((r % L + L) % L) * L + ((c % L + L) % L); };

  bonds_.resize(2 * N);
  for (int s = 0; s < N; ++s) {
    const int r = s / L, c = s % L;
    bonds_[right_bond(s)] = Bond{s, wrap(r, c + 1)};
    bonds_[up_bond(s)] = Bond{s, wrap(r + 1, c)};
  }

  site_bonds_.resize(N);
  for (int s = 0; s < N; ++s) {
    const int r = s / L, c = s % L;
    site_bonds_[s] = {BondRef{right_bond(s), +1}, BondRef{up_bond(s), +1},
                      BondRef{right_bond(wrap(r, c - 1)), -1},
                      BondRef{up_bond(wrap(r - 1, c)), -1}};
  }

  face_bonds_.resize(N);
  for (int f = 0; f < N; ++f) {
    const int r = f / L, c = f % L;
    face_bonds_[f] = {BondRef{right_bond(wrap(r, c)), +1}, BondRef{up_bond(wrap(r, c + 1)), +1},
                      BondRef{right_bond(wrap(r + 1, c)), -1}, BondRef{up_bond(wrap(r, c)), -1}};
  }

  for (int c = 0; c < L; ++c) winding_[0].push_back(BondRef{right_bond(wrap(0, c)), +1});
  for (int r = 0; r < L; ++r) winding_[1].push_back(BondRef{up_bond(wrap(r, 0)), +1});
}

int TorusLattice::site(int row, int col) const {
  if (row < 0 || row >= side_ || col < 0 || col >= side_)
    throw IndexOutOfRange("site (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside " + std::to_string(side_) + "x" + std::to_string(side_));
  return row * side_ + col;
}

const Bond& TorusLattice::bond(int b) const {
  if (b < 0 || b >= n_bonds()) throw IndexOutOfRange("bond " + std::to_string(b));
  return bonds_[b];
}

std::span<const BondRef, 4> TorusLattice::site_bonds(int site) const {
  if (site < 0 || site >= n_sites_) throw IndexOutOfRange("site " + std::to_string(site));
  return site_bonds_[site];
}

std::span<const BondRef, 4> TorusLattice::face_bonds(int face) const {
  if (face < 0 || face >= n_sites_) throw IndexOutOfRange("face " + std::to_string(face));
  return face_bonds_[face];
}

std::span<const BondRef> TorusLattice::winding_bonds(Axis axis) const {
  return winding_[axis == Axis::horizontal ? 0 : 1];
}

}  // namespace nfgmc
