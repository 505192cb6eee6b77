#pragma once

#include <cstdint>
#include <vector>

namespace hsamuel {

/// a·x >= b with a >= 0.
struct Halfspace {
  std::vector<std::int64_t> a;
  std::int64_t b;
};

/// conv(exponent vectors) + R^n_{>=0}, described by its facet inequalities.
/// Facets are found by brute force over spanning subsets of generators and
/// coordinate rays, which is adequate for a handful of variables.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(std::vector<std::vector<int>> points);

  int dim() const { return n_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  bool contains(const std::vector<int>& x) const;

  /// The polyhedron q·P, which is the Newton polyhedron of I^q.
  NewtonPolyhedron scaled(int q) const;

  /// Minimal lattice points of the polyhedron: the exponents of the minimal
  /// generators of the integral closure of the monomial ideal.
  std::vector<std::vector<int>> minimal_lattice_points() const;

 private:
  NewtonPolyhedron() = default;

  int n_ = 0;
  std::vector<std::vector<int>> points_;
  std::vector<Halfspace> facets_;
};

}  // namespace hsamuel
