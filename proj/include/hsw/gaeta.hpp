#pragma once

#include <vector>

#include "hsw/bridgeland.hpp"

namespace hsw {

// Minimal free resolution of the ideal sheaf of n generic points.  With d
// the minimal degree of a curve through the points and
// a = (d+1)(d+2)/2 - n >= 1, exactly one of two shapes occurs:
//
//   form A (c = d+2-2a >= 0):
//     0 -> O(-d-2)^b -> O(-d)^a (+) O(-d-1)^c -> I_Z -> 0,  b = a+c-1
//   form B (c < 0, c' = 2a-d-2 > 0):
//     0 -> O(-d-1)^c' (+) O(-d-2)^b -> O(-d)^a -> I_Z -> 0,  b = a-c'-1
//
// The alternating sum of the terms' Chern characters must equal (1,0,-n);
// this identity is re-verified on every call.
struct GaetaResolution {
    enum class Form { A, B };
    long long n = 0;
    long long d = 0;
    Form form = Form::A;
    long long a = 0;        // exponent of O(-d)
    long long c = 0;        // form A: exponent of O(-d-1) in the middle term
    long long c_prime = 0;  // form B: exponent of O(-d-1) in the kernel term
    long long b = 0;        // exponent of O(-d-2)

    // Alternating-sum character; equals (1, 0, -n).
    ChernCharacter character() const;
    std::string to_string() const;
};

GaetaResolution gaeta_resolution(long long n);

// Candidate destabilizing subobject built from the resolution, paired with
// the center of the wall it would cut for ch = (1,0,-n).
struct DestabCandidate {
    ChernCharacter ch;
    Rational center;
};

// Truncations of the resolution with positive rank and negative degree:
//   (i)  a . ch(O(-d))
//   (ii) form B: a . ch(O(-d)) - j . ch(O(-d-1)),                1 <= j <= c'
//   (iii) form A: a . ch(O(-d)) + c . ch(O(-d-1)) - j . ch(O(-d-2)), 0 <= j <= b
// Duplicates removed, generation order preserved.
std::vector<DestabCandidate> generic_destabilizer_candidates(long long n);

// Most negative candidate center (the collapsing-wall candidate).
Rational outermost_candidate_center(long long n);

} // namespace hsw
