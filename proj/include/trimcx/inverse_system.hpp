#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace trimcx {

/// Element of the divided power algebra D(V*), stored in the divided-power
/// monomial basis X^(A) Y^(B) Z^(C). Contraction uses
///   x^a y^b z^c . X^(A) Y^(B) Z^(C) = X^(A-a) Y^(B-b) Z^(C-c)
/// (zero if an exponent goes negative), i.e. all structure constants are 1.
class DualPoly {
public:
    DualPoly() = default;
    explicit DualPoly(HomogPoly p) : p_(std::move(p)) {}

    int degree() const { return p_.degree(); }
    bool is_zero() const { return p_.is_zero(); }
    const HomogPoly& poly() const { return p_; }

    friend bool operator==(const DualPoly&, const DualPoly&) = default;

private:
    HomogPoly p_;
};

/// Throws PreconditionError if deg f > deg phi.
DualPoly contract(const HomogPoly& f, const DualPoly& phi);

class InverseSystem {
public:
    InverseSystem() = default;
    /// Generators must be nonzero.
    explicit InverseSystem(std::vector<DualPoly> generators);

    const std::vector<DualPoly>& generators() const { return gens_; }
    std::vector<int> degrees() const;
    int max_degree() const;

private:
    std::vector<DualPoly> gens_;
};

/// Matrix of Phi_i : S_i -> ⊕_j D_{s_j - i}, f |-> (f.phi_1, ..., f.phi_k).
/// Rows are indexed by S_i (the domain), columns by the codomain; components
/// with s_j < i are omitted. With this orientation Phi_i^T = Phi_{s-i} for a
/// single generator of degree s.
StrandMatrix phi_matrix(const InverseSystem& n, int i);

/// Least i with Phi_i surjective.
int tipping_point(const InverseSystem& n);

/// 0 :_R N, minimally generated. Requires bound > max generator degree.
Ideal annihilator(const InverseSystem& n, int bound);

/// Minimal generators of the inverse system 0 :_{D} I, found through degree `bound`.
InverseSystem inverse_system(const Ideal& ideal, int bound);

struct SocleInfo {
    std::vector<int> dims;                              ///< dims[d] = dim Soc(R/I)_d
    std::vector<std::vector<HomogPoly>> representatives; ///< representatives[d], independent mod I
    int type() const;
};

/// Soc(R/I) = (I : R_+) / I, degree by degree. Throws NotArtinianError.
SocleInfo socle(const Ideal& ideal, int bound = 0);

struct CompressedCheck {
    bool compressed = false;
    int witness_degree = -1;       ///< first degree where the maximum is missed, -1 if none
    std::vector<int> hilbert;      ///< h_0..h_s
    std::vector<int> maximum;      ///< the compressed bound in each degree
};

/// Compares the Hilbert function with min{binom(e-1+i, i), sum_l c_l binom(e-1+l-i, l-i)}
/// for i = 0..s, where e is the embedding dimension, s the top socle degree
/// and c_l the socle polynomial.
CompressedCheck is_compressed(const Ideal& ideal, int bound = 0);

/// Socle shape k(-s)^ell ⊕ k(-2s+1); ell = 0 means Gorenstein with socle degree 2s-1.
struct SocleShape {
    int s = 0;
    int ell = 0;
};

struct ArtinianProfile {
    std::vector<int> hilbert;          ///< through the top socle degree
    std::vector<int> socle_polynomial; ///< c_0..c_s
    int top_socle_degree = 0;
    int type = 0;
    int tipping_point = 0;
    bool compressed = false;
    int compressed_witness = -1;
    int embedding_dimension = 0;
    std::optional<SocleShape> shape;
};

ArtinianProfile artinian_profile(const Ideal& ideal, int bound = 0);

/// Reads off (s, ell) when the socle polynomial is exactly ell z^s + z^{2s-1}
/// with s >= 2, or z^{2s-1} alone.
std::optional<SocleShape> socle_shape(const std::vector<int>& socle_polynomial);

/// Dual form of the given degree with independent uniform nonzero coefficients.
DualPoly random_dual(int degree, std::uint64_t seed);

struct RandomInstance {
    Ideal ideal;            ///< I = 0 : (phi_1, ..., phi_ell, phi_t)
    Ideal gorenstein;       ///< I_t = 0 : phi_t
    InverseSystem system;   ///< phi_1, ..., phi_ell (degree s), phi_t (degree 2s-1)
    int s = 0;
    int ell = 0;
    int attempts = 0;
};

/// Random instance with socle exactly k(-s)^ell ⊕ k(-2s+1), validated and
/// redrawn (from the same seeded stream) up to `max_attempts` times.
/// Requires s >= 3, 1 <= ell <= s+1 and char k > 4s.
RandomInstance random_instance(int s, int ell, std::uint64_t seed, int max_attempts = 16);

struct GeneratingSetDecomposition {
    int s = 0;
    int ell = 0;
    std::vector<HomogPoly> phi; ///< phi_1..phi_{s+1}: phi_1..phi_{s+1-ell} span I_s
    std::vector<HomogPoly> psi; ///< degree s+1, completing a minimal generating set of I_t
    int b() const { return static_cast<int>(psi.size()); }

    /// Minimal generating set of I_t in the order phi, psi.
    Ideal gorenstein_generators() const;
    /// 1-based positions (in gorenstein_generators) of phi_{s+2-ell}..phi_{s+1}.
    std::vector<int> cut_positions() const;
    /// (phi_1..phi_{s+1-ell}, psi) + R_+ phi_{s+2-ell} + ... + R_+ phi_{s+1}.
    Ideal trimmed_presentation() const;
};

/// Splits generators of I_t as above and verifies, strand by strand, that the
/// trimmed presentation equals I. Throws VerificationError if it does not and
/// PreconditionError if the socle of R/I does not have the expected shape.
GeneratingSetDecomposition genset_decomposition(const Ideal& ideal, const Ideal& gorenstein, int bound = 0);

} // namespace trimcx
