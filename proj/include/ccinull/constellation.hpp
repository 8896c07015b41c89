#pragma once
// Unit-energy PAM and square-QAM constellations with Gray bit labels.
//
// Points are stored in label order: the point at index i carries the bit label
// whose binary value is i (MSB first). Hamming distance between two labels is
// therefore popcount(i ^ j). BPSK follows the bit-0-positive convention:
// index 0 = +1 = label 0, index 1 = -1 = label 1.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ccinull {

using cdouble = std::complex<double>;

struct Constellation {
    unsigned order = 0;                           // M
    unsigned bits_per_symbol = 0;                 // log2 M
    std::vector<cdouble> points;                  // unit average energy, label order
    std::vector<std::vector<uint8_t>> bit_labels; // bit_labels[i] = binary digits of i
    std::string name;                             // "bpsk", "4pam", "4qam", ...
    bool is_real = false;                         // PAM family (slicing uses Re only)
};

// M in {2, 4, 8, 16}. Levels +/-1, +/-3, ... scaled to unit average energy,
// Gray-labelled over amplitude rank.
Constellation make_pam(unsigned M);

// M in {4, 16, 64}. Two independent Gray PAM rails; label = [I bits][Q bits].
Constellation make_qam(unsigned M);

// Look up the point for a bit label (length must equal bits_per_symbol).
cdouble modulate(const Constellation& c, const std::vector<uint8_t>& bits);

// Nearest point by Euclidean distance (PAM compares Re only).
// Exact distance ties resolve to the lowest index.
unsigned slice(const Constellation& c, cdouble stat);

}  // namespace ccinull
