#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddfkit/ddf.hpp"
#include "ddfkit/errors.hpp"

namespace ddfkit {

/// Frequency-hopping sequence: a word of length n over the alphabet [0, q).
class HopSequence {
public:
    HopSequence(int alphabet, std::vector<int> symbols);

    int length() const { return static_cast<int>(symbols_.size()); }
    int alphabet() const { return q_; }
    const std::vector<int>& symbols() const { return symbols_; }
    int at(int i) const { return symbols_[i]; }

    bool operator==(const HopSequence& other) const;
    bool operator!=(const HopSequence& other) const { return !(*this == other); }
    bool operator<(const HopSequence& other) const;

private:
    int q_;
    std::vector<int> symbols_;
};

/// (n, M, q) frequency-hopping scheme: a set of M words, kept sorted and
/// deduplicated (schemes are sets of words).
class Fhs {
public:
    Fhs(int length, int alphabet, std::vector<HopSequence> words);
    static Fhs single(HopSequence word);

    int length() const { return n_; }
    int alphabet() const { return q_; }
    int size() const { return static_cast<int>(words_.size()); } ///< M
    const std::vector<HopSequence>& words() const { return words_; }
    bool contains(const HopSequence& w) const;

    bool operator==(const Fhs& other) const;
    bool operator!=(const Fhs& other) const { return !(*this == other); }

private:
    int n_, q_;
    std::vector<HopSequence> words_;
};

/// Permutation of n positions. Internally 0-indexed images; the 1-indexed
/// cycle notation used at the boundary matches the usual group-theoretic
/// convention.
class Permutation {
public:
    explicit Permutation(std::vector<int> images); ///< images[i] = image of position i
    static Permutation identity(int n);
    static Permutation rotation(int n);            ///< rho_n = (1 2 ... n)
    static Permutation affine(int n, int a, int b); ///< i -> a*i + b mod n; gcd(a, n) = 1
    static Permutation from_cycles(int n, const std::string& cycles); ///< "(2 5 3)(4 6 7)"

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Left-to-right composition: (a.then(b))(i) = b(a(i)).
    Permutation then(const Permutation& next) const;
    std::string to_cycles() const; ///< 1-indexed, fixed points omitted, "()" for identity

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
    std::vector<int> images_;
};

/// Coordinate map i -> a*i + b mod n with gcd(a, n) = 1; the normalizer of
/// the rotation subgroup consists exactly of these maps.
struct AffinePerm {
    int n = 1;
    int a = 1;
    int b = 0;

    Permutation to_permutation() const;
};

/// Number of positional agreements between x and y shifted by t:
/// sum_i [x_i == y_{i+t mod n}].
int hamming_correlation(const HopSequence& x, const HopSequence& y, int t);

/// Max out-of-phase autocorrelation, over 1 <= t < n (0 when n == 1).
int max_auto(const HopSequence& x);

/// Max cross-correlation over 0 <= t < n.
int max_cross(const HopSequence& x, const HopSequence& y);

/// M(F): max of all H(x) and pairwise H(x, y) over the scheme.
int max_correlation(const Fhs& scheme);

int hamming_distance(const HopSequence& x, const HopSequence& y);

/// Entry at position i moves to position sigma(i): (w^sigma)_{sigma(i)} = w_i.
HopSequence rotate(const HopSequence& w, const Permutation& sigma);

Fhs apply_to_scheme(const Fhs& scheme, const Permutation& sigma);

/// rot(S) = { w^sigma : w in S, sigma a rotation }.
Fhs rotational_closure(const Fhs& scheme);
Fhs rotational_closure(const HopSequence& word);

bool is_rotationally_closed(const Fhs& scheme);

/// Minimum pairwise Hamming distance; requires at least two words.
int min_distance(const Fhs& scheme);

/// gamma normalizes <rho_n>: gamma rho_n gamma^{-1} is a power of rho_n.
bool is_in_normalizer(const Permutation& gamma);

/// Exponent e with gamma rho_n gamma^{-1} = rho_n^e, when gamma normalizes.
std::optional<int> rotation_conjugate_exponent(const Permutation& gamma);

/// All n*phi(n) elements of the normalizer of <rho_n> in S_n, as affine maps
/// i -> a*i + b, ordered by (a, b).
std::vector<Permutation> normalizer_elements(int n);

/// The induced map on Z_n: (a, b) with gamma^{-1} rho_n gamma = rho_n^a and
/// b = 1^gamma - 1. Applying gamma to word positions corresponds to applying
/// x -> a*x + b to the associated difference-family elements.
/// NotInNormalizer when gamma does not normalize <rho_n>.
AffinePerm phi_gamma(const Permutation& gamma);

struct FhsDdfCorrespondence {
    DifferenceFamily family;      ///< partition type over Z_n
    std::vector<int> symbol_map;  ///< class index -> symbol (symbols ascending)
};

/// Position classes per occurring symbol: j in Q_i iff x_j = symbol_map[i].
FhsDdfCorrespondence fhs_to_ddf(const HopSequence& word);

/// Inverse direction: x_j = i for j in Q_i. NotPartitionType unless the
/// classes partition Z_v.
HopSequence ddf_to_fhs(const DifferenceFamily& family);

struct FhsEquivalence {
    std::vector<int> symbol_perm; ///< symbol s -> symbol_perm[s]
    AffinePerm coord_perm;
};

/// Witness carrying F1 to F2 under Definition-style equivalence: coordinates
/// moved by a normalizer (affine) permutation, then symbols relabelled by a
/// bijection of the alphabet. All n*phi(n) coordinate maps are searched; the
/// symbol bijection is found by word matching. Empty when no witness exists
/// or the (n, M, q) parameters differ.
std::optional<FhsEquivalence> fhs_equivalent(const Fhs& f1, const Fhs& f2);

} // namespace ddfkit
