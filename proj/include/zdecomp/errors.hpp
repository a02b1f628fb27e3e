#pragma once

#include <stdexcept>
#include <string>

namespace zdecomp {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The Jacobi identity fails beyond tolerance; carries the worst quadruple.
struct JacobiViolation : Error {
  int i, j, k, l;  // 1-based basis indices of the worst offender
  double residual;
  JacobiViolation(int i_, int j_, int k_, int l_, double r)
      : Error("Jacobi identity violated at (e" + std::to_string(i_) + ", e" +
              std::to_string(j_) + ", e" + std::to_string(k_) + ") component e" +
              std::to_string(l_) + ", residual " + std::to_string(r)),
        i(i_), j(j_), k(k_), l(l_), residual(r) {}
};

/// A sparse bracket entry contradicts an earlier one (antisymmetry-completed).
struct ConflictingEntry : Error {
  int i, j, k;
  ConflictingEntry(int i_, int j_, int k_)
      : Error("conflicting structure constant for C_{" + std::to_string(i_) + "," +
              std::to_string(j_) + "}^{" + std::to_string(k_) + "}"),
        i(i_), j(j_), k(k_) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// A subspace handed to restrict_to_subspace is not bracket-closed.
struct NotASubalgebra : Error {
  int i, j;  // 1-based indices into the subspace basis
  double residual;
  NotASubalgebra(int i_, int j_, double r)
      : Error("subspace is not a subalgebra: [b" + std::to_string(i_) + ", b" +
              std::to_string(j_) + "] leaves the subspace (residual " +
              std::to_string(r) + ")"),
        i(i_), j(j_), residual(r) {}
};

struct DimensionTooSmall : Error {
  using Error::Error;
};

struct ConstraintViolation : Error {
  using Error::Error;
};

struct NotAnEigenvector : Error {
  using Error::Error;
};

/// Irreducibility cannot be decided canonically (repeated Darboux frequency).
struct AmbiguousIrreducibility : Error {
  double lambda;
  explicit AmbiguousIrreducibility(double lambda_)
      : Error("irreducibility of an eigen-bivector for eigenvalue " +
              std::to_string(lambda_) +
              " is ambiguous: repeated Darboux frequency admits inequivalent "
              "normal forms"),
        lambda(lambda_) {}
};

struct NoVerdictRecorded : Error {
  using Error::Error;
};

}  // namespace zdecomp
