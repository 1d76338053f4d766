#pragma once

#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// General banded matrix in LAPACK band storage (column-major, with the
/// extra kl rows dgbtrf needs for fill-in).
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku);

    int size() const { return n_; }
    int lower() const { return kl_; }
    int upper() const { return ku_; }

    bool in_band(int i, int j) const {
        return i - j <= kl_ && j - i <= ku_;
    }
    double& at(int i, int j);           // throws outside the band
    double get(int i, int j) const;     // zero outside the band
    void clear();

    /// Factor in place and solve for one or more right-hand sides stored
    /// contiguously (column-major, n rows each). Destroys the matrix.
    /// Throws SolverError on singular factorization.
    void solve_in_place(std::vector<double>& rhs, int nrhs = 1);

private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> a_;
    std::vector<int> ipiv_;
    bool factored_ = false;
};

}  // namespace memsim
