#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace richards {

// Bad scenario/soil/grid parameters (wrong before any state exists).
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A solver state became unusable (non-finite coefficient, positive Kirchhoff value, ...).
class state_error : public std::runtime_error {
public:
    state_error(const std::string& what, long node) : std::runtime_error(what), node_(node) {}
    long node() const { return node_; }

private:
    long node_;
};

// Local interpolation matrix too close to singular to trust.
class ill_conditioned_error : public std::runtime_error {
public:
    ill_conditioned_error(const std::string& what, double cond)
        : std::runtime_error(what), condition_(cond) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

// Linear solve failed or its residual exceeded the accepted bound.
class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Fixed-point iteration ran out of iterations; keeps the delta history for diagnosis.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::vector<double> deltas)
        : std::runtime_error(what), deltas_(std::move(deltas)) {}
    const std::vector<double>& deltas() const { return deltas_; }

private:
    std::vector<double> deltas_;
};

}  // namespace richards
