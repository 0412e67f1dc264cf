#pragma once

#include <stdexcept>
#include <string>

namespace cliffleg {

/// Operands live in different Clifford algebras (or polynomial rings).
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A division that the theory guarantees to be exact left a remainder.
class InexactDivision : public std::logic_error {
public:
    explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

/// Orthonormalisation produced a self inner product that is not a positive scalar.
class GramNotScalar : public std::runtime_error {
public:
    GramNotScalar(int m, int k, const std::string& what)
        : std::runtime_error(what), m_(m), k_(k) {}
    int m() const noexcept { return m_; }
    int k() const noexcept { return k_; }

private:
    int m_;
    int k_;
};

/// Root isolation returned a different number of roots than the degree.
class RootCountMismatch : public std::runtime_error {
public:
    explicit RootCountMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliffleg
