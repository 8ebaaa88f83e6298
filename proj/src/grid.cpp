#include "gchn/grid.hpp"

#include <cmath>

namespace gchn {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
} // namespace

Grid::Grid(int n_points, int m_periods)
    : n_(n_points),
      m_periods_(m_periods),
      half_period_(12.0 * kPi * m_periods / 17.0),
      spacing_(2.0 * half_period_ / n_points),
      freq_spacing_(kPi / half_period_) {
    xi_.resize(n_);
    for (int i = 0; i < n_; ++i) xi_[i] = freq_spacing_ * mode(i);
}

std::shared_ptr<const Grid> Grid::make(int n_points, int m_periods) {
    if (!power_of_two(n_points) || n_points < 16)
        throw std::invalid_argument("Grid: N must be a power of two >= 16, got " +
                                    std::to_string(n_points));
    if (m_periods <= 0)
        throw std::invalid_argument("Grid: M must be a positive integer, got " +
                                    std::to_string(m_periods));
    return std::shared_ptr<const Grid>(new Grid(n_points, m_periods));
}

} // namespace gchn
