// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/surface.hpp"

#include <sstream>

#include "bwc/errors.hpp"

namespace bwc {

bool Divisor::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    if (rank() != o.rank()) throw InvalidInput("divisor rank mismatch");
    std::vector<Rat> r(coords_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return Divisor(std::move(r));
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator-() const {
    std::vector<Rat> r(coords_);
    for (Rat& c : r) c = -c;
    return Divisor(std::move(r));
}

Divisor Divisor::scaled(const Rat& c) const {
    std::vector<Rat> r(coords_);
    for (Rat& x : r) x *= c;
    return Divisor(std::move(r));
}

std::string Divisor::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << rat_str(coords_[i]);
    }
    os << ")";
    return os.str();
}

Surface::Surface(std::string name, std::vector<std::vector<Int>> intersection,
                 Divisor canonical, int chi_O,
                 std::vector<std::string> basis_names)
    : name_(std::move(name)),
      rank_(static_cast<int>(intersection.size())),
      matrix_(std::move(intersection)),
      canonical_(std::move(canonical)),
      chi_O_(chi_O),
      basis_names_(std::move(basis_names)) {
    if (rank_ != 1 && rank_ != 2)
        throw InvalidInput("Picard rank must be 1 or 2");
    for (const auto& row : matrix_)
        if (static_cast<int>(row.size()) != rank_)
            throw InvalidInput("intersection matrix is not square");
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (matrix_[i][j] != matrix_[j][i])
                throw InvalidInput("intersection matrix is not symmetric");
    Int det = rank_ == 1 ? matrix_[0][0]
                         : matrix_[0][0] * matrix_[1][1] - matrix_[0][1] * matrix_[1][0];
    if (det == 0)
        throw InvalidInput("intersection matrix is degenerate");
    if (canonical_.rank() != rank_)
        throw InvalidInput("canonical class has wrong rank");
    if (basis_names_.empty()) {
        basis_names_.reserve(rank_);
        for (int i = 0; i < rank_; ++i)
            basis_names_.push_back("L" + std::to_string(i));
    }
    if (static_cast<int>(basis_names_.size()) != rank_)
        throw InvalidInput("basis name list has wrong length");
}

Rat Surface::intersect(const Divisor& a, const Divisor& b) const {
    if (a.rank() != rank_ || b.rank() != rank_)
        throw InvalidInput("divisor rank does not match the surface lattice");
    Rat total(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            total += a[i] * Rat(matrix_[i][j]) * b[j];
    return total;
}

Rat Surface::canonical_square() const { return intersect(canonical_, canonical_); }

Rat Surface::ch2_tangent() const {
    return Rat(-12) * (Rat(chi_O_) - canonical_square() / 8);
}

bool Surface::is_k3_like() const { return canonical_.is_zero() && chi_O_ == 2; }

Surface surface_p2() {
    return Surface("P2", {{Int(1)}}, Divisor({rat(-3)}), 1, {"H"});
}

Surface surface_hirzebruch(int e) {
    if (e < 0) throw OutOfRange("Hirzebruch surface needs e >= 0");
    // K = -2(E+eF) + (e-2)F = -2E - (e+2)F.
    return Surface("Sigma_" + std::to_string(e),
                   {{Int(-e), Int(1)}, {Int(1), Int(0)}},
                   Divisor({rat(-2), rat(-(e + 2))}), 1, {"E", "F"});
}

Surface surface_elliptic(int e) {
    if (e < 2) throw OutOfRange("elliptic surface with a section needs e >= 2");
    // Unique section E with E^2 = -e, K = (e-2)F, chi(O) = e.
    return Surface("S_" + std::to_string(e),
                   {{Int(-e), Int(1)}, {Int(1), Int(0)}},
                   Divisor({rat(0), rat(e - 2)}), e, {"E", "F"});
}

Surface surface_k3(std::vector<std::vector<Int>> intersection) {
    int rank = static_cast<int>(intersection.size());
    std::vector<std::string> names;
    if (rank == 1) names = {"H"};
    return Surface("K3", std::move(intersection), Divisor::zero(rank), 2,
                   std::move(names));
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
    return {ch0 + o.ch0, ch1 + o.ch1, ch2 + o.ch2};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
    return {ch0 - o.ch0, ch1 - o.ch1, ch2 - o.ch2};
}

ChernCharacter ChernCharacter::operator-() const { return {Int(-ch0), -ch1, -ch2}; }

bool ChernCharacter::operator==(const ChernCharacter& o) const {
    return ch0 == o.ch0 && ch1 == o.ch1 && ch2 == o.ch2;
}

std::string ChernCharacter::str() const {
    return "(" + ch0.get_str() + ", " + ch1.str() + ", " + rat_str(ch2) + ")";
}

MukaiVector MukaiVector::operator+(const MukaiVector& o) const {
    return {v0 + o.v0, v1 + o.v1, v2 + o.v2};
}

MukaiVector MukaiVector::operator-(const MukaiVector& o) const {
    return {v0 - o.v0, v1 - o.v1, v2 - o.v2};
}

MukaiVector MukaiVector::scaled(const Rat& c) const {
    return {Rat(v0 * c), v1.scaled(c), Rat(v2 * c)};
}

bool MukaiVector::operator==(const MukaiVector& o) const {
    return v0 == o.v0 && v1 == o.v1 && v2 == o.v2;
}

std::string MukaiVector::str() const {
    return "(" + rat_str(v0) + ", " + v1.str() + ", " + rat_str(v2) + ")";
}

MukaiVector mukai_vector(const ChernCharacter& ch, const Surface& S) {
    const Divisor& K = S.canonical_class();
    Rat x(ch.ch0);
    Divisor v1 = ch.ch1 - K.scaled(x / 4);
    Rat v2 = ch.ch2 - S.intersect(ch.ch1, K) / 4 +
             x / 2 * (Rat(S.chi_O()) - S.canonical_square() / 16);
    return {x, v1, v2};
}

Rat mukai_pairing(const MukaiVector& w, const MukaiVector& v, const Surface& S) {
    const Divisor& K = S.canonical_class();
    return S.intersect(w.v1, v.v1)
         - w.v0 * (v.v2 - S.intersect(v.v1, K) / 2)
         - v.v0 * (w.v2 + S.intersect(w.v1, K) / 2)
         - w.v0 * v.v0 * S.canonical_square() / 8;
}

MukaiVector mukai_dual(const MukaiVector& v) { return {v.v0, -v.v1, v.v2}; }

ChernCharacter mukai_dual(const ChernCharacter& ch) { return {ch.ch0, -ch.ch1, ch.ch2}; }

ChernCharacter derived_dual(const ChernCharacter& ch) {
    return {Int(-ch.ch0), ch.ch1, -ch.ch2};
}

Rat euler_pairing(const ChernCharacter& chF, const ChernCharacter& chE,
                  const Surface& S) {
    return -mukai_pairing(mukai_vector(chF, S), mukai_vector(chE, S), S);
}

Rat bogomolov_discriminant(const ChernCharacter& ch, const Surface& S) {
    return S.intersect(ch.ch1, ch.ch1) - Rat(2) * Rat(ch.ch0) * ch.ch2;
}

GradedClass graded_mul(const GradedClass& a, const GradedClass& b, const Surface& S) {
    return {Rat(a.r0 * b.r0),
            b.d1.scaled(a.r0) + a.d1.scaled(b.r0),
            a.r0 * b.r2 + S.intersect(a.d1, b.d1) + a.r2 * b.r0};
}

GradedClass graded_exp(const Divisor& d1, const Rat& r2, const Surface& S) {
    return {Rat(1), d1, r2 + S.intersect(d1, d1) / 2};
}

GradedClass sqrt_todd(const Surface& S) {
    // exp of half the logarithm Todd class (0, -K/2, -ch2(S)/12).
    return graded_exp(S.canonical_class().scaled(rat(-1, 4)),
                      -S.ch2_tangent() / 24, S);
}

} // namespace bwc
