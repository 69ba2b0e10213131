#include "gst/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

namespace gst {

bool is_word(const std::string& word) {
    return std::all_of(word.begin(), word.end(),
                       [](char c) { return c == '1' || c == '2' || c == '3'; });
}

namespace {

void require_word(const std::string& word) {
    if (!is_word(word)) {
        throw Unsupported("word '" + word + "' contains letters outside {1,2,3}");
    }
}

int letter_index(char c) { return c - '1'; }

} // namespace

AffineMap2 compose_word(const SierpinskiIFS& ifs, const std::string& word) {
    require_word(word);
    AffineMap2 result = AffineMap2::identity();
    for (char c : word) {
        result = compose(result, ifs.maps[letter_index(c)]);
    }
    return result;
}

double ratio_product(const SierpinskiIFS& ifs, const std::string& word) {
    require_word(word);
    const std::array<double, 3> r = ifs.ratios.as_array();
    double product = 1.0;
    for (char c : word) {
        product *= r[letter_index(c)];
    }
    return product;
}

ThetaStream ThetaStream::parse(const std::string& text) {
    ThetaStream theta;
    const std::size_t open = text.find('(');
    if (open == std::string::npos) {
        theta.prefix = text;
    } else {
        const std::size_t close = text.find(')', open);
        if (close == std::string::npos || close != text.size() - 1) {
            throw Unsupported("theta '" + text + "' has an unterminated period");
        }
        theta.prefix = text.substr(0, open);
        theta.period = text.substr(open + 1, close - open - 1);
        if (theta.period.empty()) {
            throw Unsupported("theta '" + text + "' declares an empty period");
        }
    }
    if (!is_word(theta.prefix) || !is_word(theta.period)) {
        throw Unsupported("theta '" + text + "' contains letters outside {1,2,3}");
    }
    return theta;
}

char ThetaStream::at(int i) const {
    if (i < 1) throw Unsupported("theta index must be positive");
    const int n = static_cast<int>(prefix.size());
    if (i <= n) return prefix[static_cast<std::size_t>(i - 1)];
    if (period.empty()) {
        throw Unsupported("theta stream is bounded at length " + std::to_string(n));
    }
    return period[static_cast<std::size_t>((i - n - 1) % static_cast<int>(period.size()))];
}

std::string ThetaStream::take(int k) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(std::max(k, 0)));
    for (int i = 1; i <= k; ++i) out.push_back(at(i));
    return out;
}

std::string ThetaStream::str() const {
    if (period.empty()) return prefix;
    return prefix + "(" + period + ")";
}

AffineMap2 inverse_prefix(const SierpinskiIFS& ifs, const ThetaStream& theta, int k) {
    if (k < 0) throw Unsupported("prefix length must be non-negative");
    AffineMap2 result = AffineMap2::identity();
    for (int i = 1; i <= k; ++i) {
        result = compose(result, invert(ifs.maps[letter_index(theta.at(i))]));
    }
    return result;
}

Tile make_tile(const SierpinskiIFS& ifs, const ThetaStream& theta, int k,
               const std::string& word) {
    if (static_cast<int>(word.size()) != k) {
        throw WordLengthMismatch("word '" + word + "' does not have length " +
                                 std::to_string(k));
    }
    Tile tile;
    tile.k = k;
    tile.word = word;
    tile.transform = compose(inverse_prefix(ifs, theta, k), compose_word(ifs, word));
    tile.scale = ratio_product(ifs, word) / ratio_product(ifs, theta.take(k));
    const std::array<Point2, 3> v = ifs.vertices();
    tile.outline = {apply(tile.transform, v[0]), apply(tile.transform, v[1]),
                    apply(tile.transform, v[2])};
    return tile;
}

Tiling make_tiling(const SierpinskiIFS& ifs, const ThetaStream& theta, int k, int k_cap) {
    if (k < 0 || k > k_cap) {
        throw DepthCap("tiling depth " + std::to_string(k) + " exceeds cap " +
                       std::to_string(k_cap));
    }
    Tiling tiling;
    tiling.theta = theta;
    tiling.k = k;
    const std::size_t count = static_cast<std::size_t>(std::pow(3.0, k) + 0.5);
    tiling.tiles.reserve(count);

    const double theta_product = ratio_product(ifs, theta.take(k));
    const std::array<Point2, 3> v = ifs.vertices();
    std::string word;
    word.reserve(static_cast<std::size_t>(k));

    // DFS in lexicographic word order, sharing prefix compositions.
    const auto descend = [&](const auto& self, const AffineMap2& transform,
                             double product) -> void {
        if (static_cast<int>(word.size()) == k) {
            Tile tile;
            tile.k = k;
            tile.word = word;
            tile.transform = transform;
            tile.scale = product / theta_product;
            tile.outline = {apply(transform, v[0]), apply(transform, v[1]),
                            apply(transform, v[2])};
            tiling.tiles.push_back(std::move(tile));
            return;
        }
        for (int letter = 0; letter < 3; ++letter) {
            word.push_back(static_cast<char>('1' + letter));
            self(self, compose(transform, ifs.maps[letter]),
                 product * ifs.ratios.as_array()[letter]);
            word.pop_back();
        }
    };
    descend(descend, inverse_prefix(ifs, theta, k), 1.0);
    return tiling;
}

std::optional<PrototileSet> algebraic_condition(const ScalingRatios& ratios, double tol,
                                                int max_exponent) {
    const double alpha = ratios.alpha;
    const double beta = ratios.beta;
    const double gamma = ratios.gamma;
    for (double r : {alpha, beta, gamma}) {
        if (!(r > 0.0 && r < 1.0)) return std::nullopt;
    }
    // Ascending total exponent, then lexicographic, so the first hit is the
    // minimal-exponent representation.
    for (int total = 3; total <= 3 * max_exponent; ++total) {
        for (int e1 = 1; e1 <= max_exponent; ++e1) {
            for (int e2 = 1; e2 <= max_exponent; ++e2) {
                const int e3 = total - e1 - e2;
                if (e3 < 1 || e3 > max_exponent) continue;
                if (std::gcd(std::gcd(e1, e2), e3) != 1) continue;
                const double s = std::pow(alpha, 1.0 / e1);
                if (std::fabs(beta - std::pow(s, e2)) > tol) continue;
                if (std::fabs(gamma - std::pow(s, e3)) > tol) continue;
                PrototileSet prototiles;
                prototiles.s = s;
                prototiles.exponents = {e1, e2, e3};
                const int amax = std::max({e1, e2, e3});
                for (int j = 1; j <= amax; ++j) {
                    prototiles.classes.push_back(std::pow(s, j));
                }
                return prototiles;
            }
        }
    }
    return std::nullopt;
}

TriangleParams solve_fff_algebraic(int x, int y) {
    if (x != 2 || y != 2) {
        throw Unsupported("only exponents x = y = 2 are supported");
    }
    // gamma = alpha^2 = beta^2 forces a = b, then (1/2a)^2 = (2a^2-1)/(2a^2)
    // gives a = sqrt(3)/2.
    const double side = std::sqrt(3.0) / 2.0;
    const TriangleParams params{side, side};
    const ScalingRatios ratios = scaling_ratios(Family::FFF, params);
    const double err = std::max(std::fabs(ratios.gamma - ratios.alpha * ratios.alpha),
                                std::fabs(ratios.gamma - ratios.beta * ratios.beta));
    if (err > tol::construction) {
        throw ConsistencyFailure("FFF algebraic solution fails gamma = alpha^2");
    }
    return params;
}

DisjointnessReport disjointness_report(const Tiling& tiling) {
    DisjointnessReport report;
    report.pass = true;
    const std::size_t n = tiling.tiles.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double area_i = triangle_area(tiling.tiles[i].outline);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double area_j = triangle_area(tiling.tiles[j].outline);
            const double overlap =
                intersection_area(tiling.tiles[i].outline, tiling.tiles[j].outline);
            const double rel = overlap / std::max(std::min(area_i, area_j), 1e-300);
            ++report.pairs_checked;
            if (rel > report.max_relative_overlap) {
                report.max_relative_overlap = rel;
                report.worst_pair = tiling.tiles[i].word + "/" + tiling.tiles[j].word;
            }
        }
    }
    report.pass = report.max_relative_overlap < tol::tile_overlap;
    return report;
}

std::vector<int> prototile_classes(const Tiling& tiling,
                                   const std::optional<PrototileSet>& prototiles,
                                   double rel_tol) {
    std::vector<int> classes(tiling.tiles.size(), 1);
    if (tiling.tiles.empty()) return classes;
    if (prototiles) {
        const double log_s = std::log(prototiles->s);
        const int amax = static_cast<int>(prototiles->classes.size());
        for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
            const double scale = tiling.tiles[i].scale;
            const int j = static_cast<int>(std::lround(std::log(scale) / log_s));
            if (std::fabs(std::pow(prototiles->s, j) - scale) > rel_tol * scale) {
                throw ConsistencyFailure("tile scale is not an integer power of s");
            }
            classes[i] = ((j - 1) % amax + amax) % amax + 1;
        }
        return classes;
    }
    // No algebraic structure: group observed scales at relative 1e-6,
    // class 1 = largest.
    std::vector<double> distinct;
    for (const Tile& tile : tiling.tiles) {
        bool found = false;
        for (double s : distinct) {
            if (std::fabs(s - tile.scale) <= 1e-6 * s) {
                found = true;
                break;
            }
        }
        if (!found) distinct.push_back(tile.scale);
    }
    std::sort(distinct.begin(), distinct.end(), std::greater<double>());
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
        for (std::size_t c = 0; c < distinct.size(); ++c) {
            if (std::fabs(distinct[c] - tiling.tiles[i].scale) <= 1e-6 * distinct[c]) {
                classes[i] = static_cast<int>(c) + 1;
                break;
            }
        }
    }
    return classes;
}

namespace {

const char* class_fill(int cls) {
    static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                    "#f39c12", "#16a085", "#7f8c8d", "#2c3e50"};
    return palette[(cls - 1) % 8];
}

} // namespace

std::string export_svg(const Tiling& tiling, const std::vector<int>& classes) {
    if (classes.size() != tiling.tiles.size()) {
        throw Unsupported("class list does not match tile count");
    }
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!tiling.tiles.empty()) {
        xmin = xmax = tiling.tiles[0].outline[0].x;
        ymin = ymax = tiling.tiles[0].outline[0].y;
        for (const Tile& tile : tiling.tiles) {
            for (const Point2& p : tile.outline) {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymin = std::min(ymin, p.y);
                ymax = std::max(ymax, p.y);
            }
        }
    }
    const double w = std::max(xmax - xmin, 1e-12);
    const double h = std::max(ymax - ymin, 1e-12);
    const double scale = 1000.0 / w;
    char buf[320];
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "viewBox=\"0 0 %.6f %.6f\">\n",
                  w * scale, h * scale);
    out += buf;
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
        const Triangle& t = tiling.tiles[i].outline;
        std::snprintf(buf, sizeof(buf),
                      "<polygon points=\"%.6f,%.6f %.6f,%.6f %.6f,%.6f\" fill=\"%s\" "
                      "stroke=\"#000000\" stroke-width=\"0.5\"/>\n",
                      (t[0].x - xmin) * scale, (ymax - t[0].y) * scale, (t[1].x - xmin) * scale,
                      (ymax - t[1].y) * scale, (t[2].x - xmin) * scale, (ymax - t[2].y) * scale,
                      class_fill(classes[i]));
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

std::string manifest_json(const SierpinskiIFS& ifs, const Tiling& tiling,
                          const std::optional<PrototileSet>& prototiles,
                          const std::vector<int>& classes) {
    if (classes.size() != tiling.tiles.size()) {
        throw Unsupported("class list does not match tile count");
    }
    nlohmann::json doc;
    doc["family"] = to_string(ifs.family);
    doc["a"] = ifs.params.a;
    doc["b"] = ifs.params.b;
    doc["theta"] = tiling.theta.str();
    doc["k"] = tiling.k;
    if (prototiles) {
        doc["prototiles"] = {{"s", prototiles->s},
                             {"exponents", prototiles->exponents},
                             {"classes", prototiles->classes}};
    }
    nlohmann::json tiles = nlohmann::json::array();
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
        tiles.push_back({{"word", tiling.tiles[i].word},
                         {"scale", tiling.tiles[i].scale},
                         {"class", classes[i]}});
    }
    doc["tiles"] = std::move(tiles);
    return doc.dump(2) + "\n";
}

} // namespace gst
