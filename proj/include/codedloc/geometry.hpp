#pragma once

#include <vector>

namespace codedloc {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

double distance(Position a, Position b);

// Axis-aligned rectangle, x_min < x_max and y_min < y_max.
struct Rect {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    Position center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
    bool valid() const;

    // Half-open membership [x_min,x_max) x [y_min,y_max); the max edge is
    // included only where it coincides with the outer rectangle's max edge,
    // so a tiling of `outer` assigns every point to exactly one tile.
    bool contains(Position p, const Rect& outer) const;
};

// Sensors at the cell centers of a rows x cols lattice over the ROI,
// ordered row-major with x varying fastest.
struct SensorField {
    std::vector<Position> positions;
    Rect roi;
    int rows = 0;
    int cols = 0;

    int size() const { return static_cast<int>(positions.size()); }
};

SensorField deploy_grid(int rows, int cols, const Rect& roi);

// Equal split of the current ROI into m regions, with region membership for
// every active sensor. Regions are indexed parent-major, then row-major
// within a parent (x fastest).
struct Partition {
    std::vector<Rect> regions;
    std::vector<Position> centers;
    std::vector<int> sensors;    // active sensors, ascending global index
    std::vector<int> region_of;  // parallel to `sensors`
    Rect outer;                  // boundary-ownership context (the field ROI)

    int m() const { return static_cast<int>(regions.size()); }
    int active_count() const { return static_cast<int>(sensors.size()); }
    int sensors_per_region() const { return active_count() / m(); }

    // Region index containing p under the half-open convention, -1 if none.
    int locate(Position p) const;
    std::vector<int> sensors_in(int region) const;
};

// `parents` holds one rectangle, or two when the previous iteration kept the
// two best regions; with two parents each contributes m/2 regions.
Partition split_region(const std::vector<Rect>& parents, int m,
                       const SensorField& field, const std::vector<int>& active);

// Checks the symmetric-pairing property: for every ordered region pair (j,l)
// the sensors of S_j, mirrored across the perpendicular bisector of the
// segment joining the two region centers, land on sensors of S_l with equal
// thresholds. `thresholds` is aligned with partition.sensors.
bool verify_pairing(const Partition& partition, const SensorField& field,
                    const std::vector<double>& thresholds);

}  // namespace codedloc
