#ifndef KDVD_FAMILY_HPP
#define KDVD_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kdvd/grid.hpp"

namespace kdvd {

/// Deterministic RNG with a platform-independent mapping from the mt19937_64
/// stream (std::uniform_real_distribution is implementation-defined, which
/// would break the byte-reproducibility contract).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double a, double b);
    double gaussian(); // Box-Muller

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class TestFamilyKind { gaussians, bumps, random_bandlimited, modulated, all };

/// One member of the frozen test family: a closed-form function of x, so it
/// can be sampled on any grid and analytically rescaled (the scaling checks
/// evaluate f(lambda x)).
struct FamilyMember {
    std::string name;
    std::function<cplx(double)> f;
    /// frequency content cutoff used to size propagation domains
    double bandwidth = 2.0;
};

/// The frozen standard family (parameters mirrored in config/standard_family.json):
///   gaussians  e^{-x^2/(2 w^2)}, w in {0.25, 1, 4}
///   bumps      bump_function shifted to centers {-6, 0, 5}
///   random     8 modes, xi ~ U(0.2, 2), complex gaussian amplitudes, times
///              a width-10 gaussian envelope; 3 draws from the seed
///   modulated  e^{i k x} e^{-x^2}, k in {0.5, 1, 1.5}
std::vector<FamilyMember> standard_family(TestFamilyKind kind, std::uint64_t seed);

/// Gaussian-mollified exponential e^{-|x|} * N(0, delta^2) in closed form
/// (erfc); the Landau minimizer family.
double smoothed_exponential(double x, double delta);

/// Grid sized so a kdv propagation up to time t of a member with the given
/// bandwidth keeps its dispersed mass inside the box (group speed 3 xi^2).
GridSpec propagation_grid(double bandwidth, double t, double x_margin = 60.0);

} // namespace kdvd

#endif
