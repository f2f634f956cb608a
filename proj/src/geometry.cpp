#include "codedloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace codedloc {

double distance(Position a, Position b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool Rect::valid() const {
    return std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
           std::isfinite(y_max) && x_min < x_max && y_min < y_max;
}

bool Rect::contains(Position p, const Rect& outer) const {
    bool x_ok = p.x >= x_min && (p.x < x_max || (x_max == outer.x_max && p.x <= x_max));
    bool y_ok = p.y >= y_min && (p.y < y_max || (y_max == outer.y_max && p.y <= y_max));
    return x_ok && y_ok;
}

SensorField deploy_grid(int rows, int cols, const Rect& roi) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("deploy_grid: rows and cols must be >= 1");
    }
    if (!roi.valid()) {
        throw std::invalid_argument("deploy_grid: invalid ROI rectangle");
    }
    SensorField field;
    field.roi = roi;
    field.rows = rows;
    field.cols = cols;
    field.positions.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        double y = roi.y_min + (r + 0.5) * roi.height() / rows;
        for (int c = 0; c < cols; ++c) {
            double x = roi.x_min + (c + 0.5) * roi.width() / cols;
            field.positions.push_back({x, y});
        }
    }
    return field;
}

int Partition::locate(Position p) const {
    for (int j = 0; j < m(); ++j) {
        if (regions[j].contains(p, outer)) return j;
    }
    return -1;
}

std::vector<int> Partition::sensors_in(int region) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < sensors.size(); ++k) {
        if (region_of[k] == region) out.push_back(sensors[k]);
    }
    return out;
}

namespace {

// Balanced factorization a*b = m with a <= b.
void balanced_factors(int m, int& a, int& b) {
    a = 1;
    for (int d = 1; d * d <= m; ++d) {
        if (m % d == 0) a = d;
    }
    b = m / a;
}

// Split one rectangle into an a x b grid of sub-rectangles, the larger
// factor along the longer side. Sub-rectangles appended row-major.
void split_one(const Rect& parent, int pieces, std::vector<Rect>& out) {
    int a = 1, b = 1;
    balanced_factors(pieces, a, b);
    int nx = b, ny = a;
    if (parent.width() < parent.height()) std::swap(nx, ny);
    for (int ry = 0; ry < ny; ++ry) {
        double y0 = parent.y_min + parent.height() * ry / ny;
        double y1 = parent.y_min + parent.height() * (ry + 1) / ny;
        for (int rx = 0; rx < nx; ++rx) {
            double x0 = parent.x_min + parent.width() * rx / nx;
            double x1 = parent.x_min + parent.width() * (rx + 1) / nx;
            out.push_back({x0, x1, y0, y1});
        }
    }
}

}  // namespace

Partition split_region(const std::vector<Rect>& parents, int m,
                       const SensorField& field, const std::vector<int>& active) {
    if (m < 2) throw std::invalid_argument("split_region: m must be >= 2");
    if (parents.empty() || parents.size() > 2) {
        throw std::invalid_argument("split_region: expected one or two parent rectangles");
    }
    if (parents.size() == 2 && m % 2 != 0) {
        throw std::invalid_argument("split_region: m must be even with a pair of parents");
    }
    for (const Rect& r : parents) {
        if (!r.valid()) throw std::invalid_argument("split_region: invalid parent rectangle");
    }
    if (active.empty() || static_cast<int>(active.size()) % m != 0) {
        throw std::invalid_argument(
            "split_region: active sensor count (" + std::to_string(active.size()) +
            ") not divisible by m (" + std::to_string(m) + ")");
    }

    Partition part;
    part.outer = field.roi;
    part.sensors = active;
    std::sort(part.sensors.begin(), part.sensors.end());
    int per_parent = m / static_cast<int>(parents.size());
    for (const Rect& parent : parents) split_one(parent, per_parent, part.regions);
    part.centers.reserve(part.regions.size());
    for (const Rect& r : part.regions) part.centers.push_back(r.center());

    part.region_of.resize(part.sensors.size());
    std::vector<int> count(part.regions.size(), 0);
    for (std::size_t k = 0; k < part.sensors.size(); ++k) {
        Position p = field.positions.at(part.sensors[k]);
        int j = part.locate(p);
        if (j < 0) {
            throw std::invalid_argument("split_region: active sensor " +
                                        std::to_string(part.sensors[k]) +
                                        " lies outside every parent rectangle");
        }
        part.region_of[k] = j;
        ++count[j];
    }
    int want = static_cast<int>(part.sensors.size()) / m;
    for (int j = 0; j < part.m(); ++j) {
        if (count[j] != want) {
            throw std::invalid_argument("split_region: unequal sensor counts, region " +
                                        std::to_string(j) + " holds " +
                                        std::to_string(count[j]) + " of " +
                                        std::to_string(want));
        }
    }
    return part;
}

bool verify_pairing(const Partition& partition, const SensorField& field,
                    const std::vector<double>& thresholds) {
    int m = partition.m();
    if (m <= 1) return true;
    if (thresholds.size() != partition.sensors.size()) return false;

    std::vector<std::vector<int>> members(m);  // positions into partition.sensors
    for (std::size_t k = 0; k < partition.sensors.size(); ++k) {
        members[partition.region_of[k]].push_back(static_cast<int>(k));
    }
    double scale = std::max(partition.outer.width(), partition.outer.height());
    double pos_tol = 1e-9 * std::max(1.0, scale);

    for (int j = 0; j < m; ++j) {
        for (int l = 0; l < m; ++l) {
            if (l == j) continue;
            if (members[j].size() != members[l].size()) return false;
            Position cj = partition.centers[j];
            Position cl = partition.centers[l];
            double len = distance(cj, cl);
            if (len <= 0.0) return false;
            double ux = (cl.x - cj.x) / len;
            double uy = (cl.y - cj.y) / len;
            Position mid{0.5 * (cj.x + cl.x), 0.5 * (cj.y + cl.y)};

            std::vector<bool> used(members[l].size(), false);
            for (int kj : members[j]) {
                Position p = field.positions.at(partition.sensors[kj]);
                // Reflect across the perpendicular bisector of (cj, cl).
                double t = (p.x - mid.x) * ux + (p.y - mid.y) * uy;
                Position mirrored{p.x - 2.0 * t * ux, p.y - 2.0 * t * uy};
                bool matched = false;
                for (std::size_t s = 0; s < members[l].size(); ++s) {
                    if (used[s]) continue;
                    int kl = members[l][s];
                    Position q = field.positions.at(partition.sensors[kl]);
                    if (distance(q, mirrored) > pos_tol) continue;
                    double eta_j = thresholds[kj];
                    double eta_l = thresholds[kl];
                    if (std::abs(eta_j - eta_l) >
                        1e-9 * std::max(1.0, std::abs(eta_j))) {
                        continue;
                    }
                    used[s] = true;
                    matched = true;
                    break;
                }
                if (!matched) return false;
            }
        }
    }
    return true;
}

}  // namespace codedloc
