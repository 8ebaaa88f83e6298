#pragma once
// Physical-space samples and Fourier coefficients of real fields.

#include <complex>
#include <stdexcept>
#include <vector>

#include "gchn/grid.hpp"

namespace gchn {

struct Field {
    GridPtr grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}
    Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid->size())
            throw std::invalid_argument("Field: value count does not match grid");
    }

    int size() const { return grid->size(); }
    double operator[](int j) const { return values[j]; }
    double& operator[](int j) { return values[j]; }
};

// Coefficients of exp(i*xi_m*x) in FFT index order (see Grid::mode). For a
// real field they satisfy coeff(-m) = conj(coeff(m)).
struct SpectralField {
    GridPtr grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    explicit SpectralField(GridPtr g) : grid(std::move(g)), coeffs(grid->size()) {}

    int size() const { return grid->size(); }
};

inline void require_same_grid(const Field& a, const Field& b) {
    if (!a.grid->same_as(*b.grid))
        throw std::invalid_argument("fields live on different grids");
}

} // namespace gchn
