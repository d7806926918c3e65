#pragma once

#include "potstab/graph.hpp"
#include "potstab/potential.hpp"

#include <optional>
#include <string>
#include <utility>

namespace potstab {

struct DoubleStarCover {
    int b1 = 0;
    int b2 = 0;
};

/// Smallest (b1, b2) in lexicographic order with b1 >= b2 and b1 + b2 =
/// alpha such that H spans K_{k-alpha-2} v S_{b1,b2}. Throws
/// std::domain_error when k - alpha - 2 < 0 (the question is ill-posed).
std::optional<DoubleStarCover> double_star_cover(const SmallGraph& h);

enum class SigmaStatus { Stable, NotStable, Unknown };
enum class SigmaTheorem { None, MainLow, MainHigh, NotStable };

struct StabilityVerdict {
    SigmaStatus status = SigmaStatus::Unknown;
    SigmaTheorem theorem = SigmaTheorem::None;
    /// Pattern of the rho(H, n) witness; set exactly when status is NotStable.
    std::optional<std::string> witness_pattern;
    /// Set exactly for Stable via MainHigh.
    std::optional<DoubleStarCover> cover;
    std::string note;
};

/// Decision procedure over the Type / cover / one-edge-set cells. Throws
/// std::invalid_argument for edgeless input.
StabilityVerdict classify_sigma(const SmallGraph& h);

enum class WeakStatus { WeaklyStable, NotWeaklyStable, Unknown };
enum class WeakBasis {
    None,
    CliqueTheorem,            ///< K_k, k >= 3
    RhoDegreeSufficient,      ///< not sigma-stable via rho, and rho degree-sufficient
    ImpliedBySigmaStability,  ///< follows from the definitions, not a cited theorem
};

struct WeakVerdict {
    WeakStatus status = WeakStatus::Unknown;
    WeakBasis basis = WeakBasis::None;
    std::optional<std::string> witness_pattern;
    std::string note;
};

WeakVerdict classify_weak(const SmallGraph& h);

std::string to_string(SigmaStatus s);
std::string to_string(SigmaTheorem t);
std::string to_string(WeakStatus s);
std::string to_string(WeakBasis b);

} // namespace potstab
