#pragma once

#include <array>
#include <span>
#include <vector>

namespace nfgmc {

/// Oriented bond of the wrapped grid: points right or up from its base site.
struct Bond {
  int base = 0;
  int head = 0;
};

/// Reference to a bond with an incidence sign (+1/-1).
struct BondRef {
  int bond = 0;
  int sign = 0;
};

enum class Axis { horizontal, vertical };

/// Wrapped L x L square lattice: N = L^2 sites, 2N oriented bonds, N faces
/// (plaquettes) and the two non-contractible winding loops of the torus.
///
/// Bond ids: bond s in [0, N) is the right bond of site s; bond N + s is the
/// up bond of site s. Site ids: row * L + col. At L = 2 the wrap makes two
/// distinct bonds join each adjacent pair of sites; all sums in this library
/// run over the 2N oriented bonds, never over deduplicated pairs.
class TorusLattice {
 public:
  explicit TorusLattice(int side);

  int side() const { return side_; }
  int n_sites() const { return n_sites_; }
  int n_bonds() const { return 2 * n_sites_; }
  int n_faces() const { return n_sites_; }

  int site(int row, int col) const;
  int right_bond(int site) const { return site; }
  int up_bond(int site) const { return n_sites_ + site; }

  const Bond& bond(int b) const;

  /// The 4 bonds incident with a site: +1 for outgoing, -1 for incoming.
  std::span<const BondRef, 4> site_bonds(int site) const;

  /// The 4 boundary bonds of the plaquette whose base corner is face (r, c):
  /// right(r,c) +1, up(r,c+1) +1, right(r+1,c) -1, up(r,c) -1. Each bond
  /// appears in exactly two faces with opposite signs.
  std::span<const BondRef, 4> face_bonds(int face) const;

  /// A non-contractible cycle of L bonds, each with sign +1: horizontal
  /// axis = the right bonds of row 0, vertical axis = the up bonds of
  /// column 0. Together with face boundaries these generate the full
  /// divergence-free bond configuration space.
  std::span<const BondRef> winding_bonds(Axis axis) const;

 private:
  int side_;
  int n_sites_;
  std::vector<Bond> bonds_;
  std::vector<std::array<BondRef, 4>> site_bonds_;
  std::vector<std::array<BondRef, 4>> face_bonds_;
  std::array<std::vector<BondRef>, 2> winding_;
};

inline TorusLattice build_torus(int side) { return TorusLattice(side); }

}  // namespace nfgmc
