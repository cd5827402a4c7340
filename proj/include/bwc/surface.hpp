// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bwc/rational.hpp"

namespace bwc {

// An element of the rational Neron-Severi space, written in the
// coordinates of the surface's declared Picard basis.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    static Divisor zero(int rank) { return Divisor(std::vector<Rat>(rank, Rat(0))); }

    int rank() const { return static_cast<int>(coords_.size()); }
    const Rat& operator[](int i) const { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor scaled(const Rat& c) const;
    bool operator==(const Divisor& o) const { return coords_ == o.coords_; }

    std::string str() const;

private:
    std::vector<Rat> coords_;
};

inline Divisor operator*(const Rat& c, const Divisor& d) { return d.scaled(c); }

// A lattice model of a smooth projective surface of Picard rank 1 or 2:
// the intersection form on the declared basis, the canonical class, and
// chi(O_S). Only numerical data enters any computation.
//
// The second Chern character of the tangent sheaf is derived from
// Noether's formula, ch2(S) = -12 (chi(O_S) - K_S^2 / 8).
class Surface {
public:
    Surface(std::string name, std::vector<std::vector<Int>> intersection,
            Divisor canonical, int chi_O,
            std::vector<std::string> basis_names = {});

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int chi_O() const { return chi_O_; }
    const Divisor& canonical_class() const { return canonical_; }
    const std::vector<std::vector<Int>>& intersection_matrix() const { return matrix_; }
    const std::string& basis_name(int i) const { return basis_names_[i]; }

    // Bilinear intersection pairing a . b on the declared lattice.
    Rat intersect(const Divisor& a, const Divisor& b) const;

    Rat canonical_square() const;          // K_S^2
    Rat ch2_tangent() const;               // ch2(S)

    bool is_k3_like() const;               // K_S = 0 and chi(O_S) = 2

private:
    std::string name_;
    int rank_;
    std::vector<std::vector<Int>> matrix_;
    Divisor canonical_;
    int chi_O_;
    std::vector<std::string> basis_names_;
};

// Built-in lattice presets.
Surface surface_p2();
Surface surface_hirzebruch(int e);             // basis (E, F), e >= 0
Surface surface_elliptic(int e);               // basis (E, F), e >= 2
Surface surface_k3(std::vector<std::vector<Int>> intersection = {{Int(2)}});

struct ChernCharacter {
    Int ch0;
    Divisor ch1;
    Rat ch2;

    ChernCharacter operator+(const ChernCharacter& o) const;
    ChernCharacter operator-(const ChernCharacter& o) const;
    ChernCharacter operator-() const;
    bool operator==(const ChernCharacter& o) const;

    std::string str() const;
};

struct MukaiVector {
    Rat v0;
    Divisor v1;
    Rat v2;

    MukaiVector operator+(const MukaiVector& o) const;
    MukaiVector operator-(const MukaiVector& o) const;
    MukaiVector scaled(const Rat& c) const;
    bool operator==(const MukaiVector& o) const;

    std::string str() const;
};

// v(E) = ch(E) . exp(ln td(S) / 2), written out on a surface.
MukaiVector mukai_vector(const ChernCharacter& ch, const Surface& S);

// <w, v>_S = w1.v1 - w0 (v2 - v1.K/2) - v0 (w2 + w1.K/2) - w0 v0 K^2 / 8.
// Not symmetric unless K_S = 0; the defect is w0 (v1.K) - v0 (w1.K).
Rat mukai_pairing(const MukaiVector& w, const MukaiVector& v, const Surface& S);

// Degree-wise involution (a0, a1, a2) -> (a0, -a1, a2).
MukaiVector mukai_dual(const MukaiVector& v);
ChernCharacter mukai_dual(const ChernCharacter& ch);

// Character of the shifted derived dual, ch -> (-ch0, ch1, -ch2).
ChernCharacter derived_dual(const ChernCharacter& ch);

// chi(F, E) via Hirzebruch-Riemann-Roch, as -<v(F), v(E)>_S.
Rat euler_pairing(const ChernCharacter& chF, const ChernCharacter& chE,
                  const Surface& S);

// ch1^2 - 2 ch0 ch2.
Rat bogomolov_discriminant(const ChernCharacter& ch, const Surface& S);

// Truncated cohomology class (r0, d1, r2), multiplied degree by degree.
// exp of a degree >= 1 class is (1, d1, r2 + d1^2 / 2).
struct GradedClass {
    Rat r0;
    Divisor d1;
    Rat r2;
};

GradedClass graded_mul(const GradedClass& a, const GradedClass& b, const Surface& S);
GradedClass graded_exp(const Divisor& d1, const Rat& r2, const Surface& S);
GradedClass sqrt_todd(const Surface& S);    // (1, -K/4, chi(O)/2 - K^2/32)

} // namespace bwc
