#pragma once
// Periodic grid geometry. The domain is [-L, L) with L = 12*pi*M/17; that
// denominator puts every packet carrier (17/12)*2^n exactly on the frequency
// lattice xi_m = pi*m/L, so dyadic block localization survives discretization.

#include <memory>
#include <stdexcept>
#include <vector>

namespace gchn {

class Grid {
public:
    // N: point count (power of two, >= 16). M: positive integer, L = 12*pi*M/17.
    static std::shared_ptr<const Grid> make(int n_points, int m_periods);

    int size() const { return n_; }
    int m_periods() const { return m_periods_; }
    double half_period() const { return half_period_; } // L
    double spacing() const { return spacing_; }         // h = 2L/N
    double freq_spacing() const { return freq_spacing_; } // pi/L
    double nyquist() const { return freq_spacing_ * (n_ / 2); }

    // x_j = -L + j*h, j in [0, N)
    double x(int j) const { return -half_period_ + spacing_ * j; }

    // Frequencies in FFT index order: index i holds mode m = i for i < N/2,
    // m = i - N for i >= N/2 (index N/2 is the unpaired Nyquist mode -N/2).
    double xi(int index) const { return xi_[index]; }
    const std::vector<double>& xi() const { return xi_; }
    int mode(int index) const { return index < n_ / 2 ? index : index - n_; }
    int index_of_mode(int m) const { return m >= 0 ? m : m + n_; }

    bool same_as(const Grid& other) const { return this == &other; }

private:
    Grid(int n_points, int m_periods);

    int n_;
    int m_periods_;
    double half_period_;
    double spacing_;
    double freq_spacing_;
    std::vector<double> xi_;
};

using GridPtr = std::shared_ptr<const Grid>;

} // namespace gchn
