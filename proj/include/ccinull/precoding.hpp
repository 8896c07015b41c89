#pragma once
// Transmit phase selection and quantized feedback.
//
// User 2's phase is chosen so the interference it causes in user 1's decision
// statistic lands on the imaginary axis: beta2 = beta1 + alpha1 - alpha2 + pi/2.
// The receive side quantizes beta2 to one of B codewords on the unit circle
// (angles 2 pi k / B) and feeds the index back; the surviving interference is
// proportional to sin(eps2) with eps2 the wrapped quantization error.
//
// Angle conventions: absolute phases wrap to [0, 2pi); differences to (-pi, pi].

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace ccinull {

using cdouble = std::complex<double>;

double wrap_two_pi(double a);   // -> [0, 2pi)
double wrap_pm_pi(double a);    // -> (-pi, pi]

struct PhaseCodebook {
    unsigned levels = 0;             // B
    std::vector<cdouble> codewords;  // exp(j 2 pi k / B), k = 0..B-1
};

// B >= 2 (one feedback bit at minimum).
PhaseCodebook make_codebook(unsigned levels);

// beta2 = beta1 + alpha1 - alpha2 + pi/2, wrapped to [0, 2pi).
double ideal_beta2(double alpha1, double alpha2, double beta1);

struct QuantizedPhase {
    unsigned index = 0;   // fed-back codeword index
    double angle = 0;     // codeword angle 2 pi index / B
    double eps2 = 0;      // wrap_pm_pi(angle - beta2), |eps2| <= pi/B
};

// Nearest codeword of exp(j beta2) in Euclidean distance; exact midpoints
// resolve to the lower codeword index.
QuantizedPhase quantize_phase(const PhaseCodebook& cb, double beta2);

struct MrcPhase {
    double beta2 = 0;
    bool degenerate = false;  // h1^H h2 == 0: nothing to rotate, beta2 = beta1
};

// Multi-antenna AP: beta2 = beta1 + pi/2 - arg(h1^H h2), wrapped to [0, 2pi).
MrcPhase beta2_mrc(const std::vector<cdouble>& h1, const std::vector<cdouble>& h2,
                   double beta1);

// One trial's transmit phases plus feedback diagnostics.
struct PrecodingAssignment {
    double beta1 = 0;
    double beta2 = 0;                       // as used by transmitter 2
    std::optional<unsigned> feedback_index; // present when quantized
    std::optional<double> eps2;
};

}  // namespace ccinull
