#include "memsim/banded.hpp"

#include <string>

extern "C" {
void dgbtrf_(const int* m, const int* n, const int* kl, const int* ku,
             double* ab, const int* ldab, int* ipiv, int* info);
void dgbtrs_(const char* trans, const int* n, const int* kl, const int* ku,
             const int* nrhs, const double* ab, const int* ldab,
             const int* ipiv, double* b, const int* ldb, int* info);
}

namespace memsim {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
      a_(static_cast<std::size_t>(ldab_) * n, 0.0), ipiv_(n, 0) {}

double& BandedMatrix::at(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || !in_band(i, j))
        throw SolverError("BandedMatrix: entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside the band");
    // dgbtrf layout: AB(kl+ku+1+i-j, j) in 1-based Fortran indexing.
    return a_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

double BandedMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || !in_band(i, j)) return 0.0;
    return a_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

void BandedMatrix::clear() {
    std::fill(a_.begin(), a_.end(), 0.0);
    factored_ = false;
}

void BandedMatrix::solve_in_place(std::vector<double>& rhs, int nrhs) {
    if (static_cast<int>(rhs.size()) != n_ * nrhs)
        throw SolverError("BandedMatrix::solve_in_place: rhs size mismatch");
    int info = 0;
    if (!factored_) {
        dgbtrf_(&n_, &n_, &kl_, &ku_, a_.data(), &ldab_, ipiv_.data(), &info);
        if (info != 0)
            throw SolverError("dgbtrf failed, info = " + std::to_string(info));
        factored_ = true;
    }
    const char trans = 'N';
    dgbtrs_(&trans, &n_, &kl_, &ku_, &nrhs, a_.data(), &ldab_, ipiv_.data(),
            rhs.data(), &n_, &info);
    if (info != 0)
        throw SolverError("dgbtrs failed, info = " + std::to_string(info));
}

}  // namespace memsim
