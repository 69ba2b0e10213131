#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gst/ifs.hpp"
#include "gst/polygon.hpp"

namespace gst {

// Words are strings over {'1','2','3'} addressing map compositions with the
// fixed correspondence 1 -> f_A, 2 -> f_B, 3 -> f_C.
bool is_word(const std::string& word);

// f_word = f_w1 . f_w2 . ... . f_wk (rightmost letter applied first);
// the empty word is the identity.
AffineMap2 compose_word(const SierpinskiIFS& ifs, const std::string& word);

double ratio_product(const SierpinskiIFS& ifs, const std::string& word);

// Eventually periodic address stream: literal prefix plus repeating period,
// parsed from e.g. "3(12)" = 3,1,2,1,2,...  An empty period declares a
// finite stream bounded by the prefix length.
struct ThetaStream {
    std::string prefix;
    std::string period;

    static ThetaStream parse(const std::string& text); // throws Unsupported
    char at(int i) const;                              // 1-based; throws past a finite bound
    std::string take(int k) const;                     // theta|k
    bool bounded() const { return period.empty(); }
    std::string str() const;
};

// (f^-1)_theta|k = f^-1_theta1 . f^-1_theta2 . ... . f^-1_thetak.
// Inverses compose in address order, which is what makes consecutive
// tilings nest; the expansion factor is the reciprocal ratio product.
AffineMap2 inverse_prefix(const SierpinskiIFS& ifs, const ThetaStream& theta, int k);

struct Tile {
    int k = 0;
    std::string word;
    AffineMap2 transform; // (f^-1)_theta|k . f_word
    double scale = 1.0;   // ratio product of word over ratio product of theta|k
    Triangle outline{};   // transform applied to the hull
};

// Requires |word| == k (throws WordLengthMismatch).
Tile make_tile(const SierpinskiIFS& ifs, const ThetaStream& theta, int k,
               const std::string& word);

struct Tiling {
    ThetaStream theta;
    int k = 0;
    std::vector<Tile> tiles; // all of [3]^k, lexicographic
};

Tiling make_tiling(const SierpinskiIFS& ifs, const ThetaStream& theta, int k, int k_cap = 12);

// When all three ratios are integer powers of a common base s, the tiling
// draws on finitely many prototile sizes {s^1, ..., s^amax}.
struct PrototileSet {
    double s = 0.0;
    std::array<int, 3> exponents{}; // gcd 1, each in [1, max_exponent]
    std::vector<double> classes;    // distinct scales, descending
};

// Searches exponent triples with 1 <= e_i <= max_exponent by ascending
// total, returning the first triple whose base s = alpha^(1/e1) reproduces
// beta and gamma within tol.
std::optional<PrototileSet> algebraic_condition(const ScalingRatios& ratios,
                                                double tol = tol::algebraic,
                                                int max_exponent = 12);

// Side lengths making the FFF ratios satisfy gamma = alpha^x = beta^y.
// Only x = y = 2 is supported, giving a = b = sqrt(3)/2.
TriangleParams solve_fff_algebraic(int x, int y); // throws Unsupported

struct DisjointnessReport {
    bool pass = false;
    double max_relative_overlap = 0.0; // intersection over smaller tile area
    std::size_t pairs_checked = 0;
    std::string worst_pair; // "word/word"
};

DisjointnessReport disjointness_report(const Tiling& tiling);

// 1-based prototile class per tile. Under the algebraic condition the class
// is the scale exponent reduced to [1, amax] (tilings at different k are the
// same pattern rescaled by a global power of s); rel_tol bounds how far a
// tile scale may sit from its power of s, and must grow with the detection
// tolerance when the ratios are only approximately algebraic. Without the
// condition, scales are clustered at 1e-6 relative tolerance, largest class
// first.
std::vector<int> prototile_classes(const Tiling& tiling,
                                   const std::optional<PrototileSet>& prototiles,
                                   double rel_tol = 1e-9);

// One polygon per tile, fill keyed by prototile class.
std::string export_svg(const Tiling& tiling, const std::vector<int>& classes);

// JSON manifest: family, parameters, theta, k, prototile data when present,
// and one (word, scale, class) record per tile.
std::string manifest_json(const SierpinskiIFS& ifs, const Tiling& tiling,
                          const std::optional<PrototileSet>& prototiles,
                          const std::vector<int>& classes);

} // namespace gst
