#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentabeam {

/// Boundary conditions of the beam: fixed at x=0 and either free or fixed at x=1.
enum class BoundaryKind { ClampedFree, ClampedClamped };

inline constexpr int kMinUnknowns = 5;

inline std::string to_string(BoundaryKind bc) {
    return bc == BoundaryKind::ClampedFree ? "cf" : "cc";
}

inline BoundaryKind parse_boundary_kind(std::string_view text) {
    if (text == "cf") return BoundaryKind::ClampedFree;
    if (text == "cc") return BoundaryKind::ClampedClamped;
    throw std::invalid_argument("bc must be cf or cc");
}

/// Discrete beam problem: n unknowns u_1..u_n approximating the deflection at
/// the interior grid points, load constant k, and grid spacing h.
///
/// The spacing is tied to the boundary condition: a clamped-free grid has
/// h = 1/n (the free end x=1 carries an unknown), a clamped-clamped grid has
/// h = 1/(n+1) (both ends are boundary points).
struct BeamProblem {
    BoundaryKind bc;
    int n;
    double k;
    double h;

    BeamProblem(BoundaryKind bc_, int n_, double k_) : bc(bc_), n(n_), k(k_), h(0.0) {
        if (n < kMinUnknowns) throw std::invalid_argument("n must be >= 5");
        if (!(k > 0.0)) throw std::invalid_argument("k must be > 0");
        h = bc == BoundaryKind::ClampedFree ? 1.0 / n : 1.0 / (n + 1);
    }
};

}  // namespace pentabeam
