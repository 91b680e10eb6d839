#pragma once

#include <complex>

extern "C" {

using lapack_select2 = int (*)(const std::complex<double>*, const std::complex<double>*);

void zggev_(const char* jobvl, const char* jobvr, const int* n, std::complex<double>* a, const int* lda,
            std::complex<double>* b, const int* ldb, std::complex<double>* alpha, std::complex<double>* beta,
            std::complex<double>* vl, const int* ldvl, std::complex<double>* vr, const int* ldvr,
            std::complex<double>* work, const int* lwork, double* rwork, int* info);

void dggev_(const char* jobvl, const char* jobvr, const int* n, double* a, const int* lda, double* b,
            const int* ldb, double* alphar, double* alphai, double* beta, double* vl, const int* ldvl,
            double* vr, const int* ldvr, double* work, const int* lwork, int* info);

void zgges_(const char* jobvsl, const char* jobvsr, const char* sort, lapack_select2 selctg, const int* n,
            std::complex<double>* a, const int* lda, std::complex<double>* b, const int* ldb, int* sdim,
            std::complex<double>* alpha, std::complex<double>* beta, std::complex<double>* vsl,
            const int* ldvsl, std::complex<double>* vsr, const int* ldvsr, std::complex<double>* work,
            const int* lwork, double* rwork, int* bwork, int* info);

void zgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n, std::complex<double>* a,
             const int* lda, double* s, std::complex<double>* u, const int* ldu, std::complex<double>* vt,
             const int* ldvt, std::complex<double>* work, const int* lwork, double* rwork, int* info);
}
