#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/module.hpp"

namespace jacal {

/// F_L -> ... -> F_1 -> F_0 -> M -> 0 with maps d_1..d_L (d_i has rank(F_{i-1})
/// rows and rank(F_i) columns), entries reduced modulo the defining ideal.
struct FreeResolution {
  QuotientRing ring;
  std::vector<PolyMatrix> maps;
  /// rank(F_0), ..., rank(F_L).
  std::vector<std::size_t> ranks;
  /// Generator degrees of each F_i when the input is graded.
  std::optional<std::vector<std::vector<int>>> twists;
  /// Graded minimality certified (homogeneous input).
  bool minimal = false;
  /// The next syzygy module is zero, so the resolution is finite and
  /// complete as computed.
  bool complete = false;
  /// exact[i] certifies ker d_{i+1} = im d_{i+2} (interior steps).
  std::vector<bool> exact;

  std::size_t length() const { return maps.size(); }
  /// "minimal" or "minimality not certified".
  std::string status() const { return minimal ? "minimal" : "minimality not certified"; }
  std::string to_string() const;
};

/// Iterated syzygies of M, minimalized by removing unit pivots and redundant
/// columns. Over a proper quotient ring max_length is required.
FreeResolution free_resolution(const FPModule& m, std::optional<std::size_t> max_length);

struct DepthPd {
  int depth;
  int pd;
};

/// Projective dimension over the ambient polynomial ring from a minimal
/// graded resolution, and depth = n - pd. Homogeneous input only.
/// Columns of a and b span the same submodule.
bool same_image(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b);
/// Some reordering of the rows of a (a change of basis permuting the target
/// free module) has the same image as b. Brute force over permutations.
bool same_image_up_to_basis(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b);

DepthPd depth_and_pd(const QuotientRing& ring);
DepthPd depth_and_pd(const FPModule& m);

}  // namespace jacal
