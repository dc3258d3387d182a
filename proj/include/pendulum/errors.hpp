#pragma once

#include <stdexcept>
#include <string>

namespace pendulum {

/// Bad scenario file, bad flag value, unknown config key.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Non-finite values appeared during time stepping.
class divergence_error : public std::runtime_error {
public:
    divergence_error(std::string what, double time)
        : std::runtime_error(std::move(what)), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Chart coordinates left the open upper hemisphere.
class chart_domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A return-map trajectory dipped below the z floor, i.e. the start point
/// is outside the falling-free basin.
class left_block_error : public std::runtime_error {
public:
    left_block_error(std::string what, double time, double z)
        : std::runtime_error(std::move(what)), time_(time), z_(z) {}
    double time() const { return time_; }
    double z() const { return z_; }

private:
    double time_;
    double z_;
};

}  // namespace pendulum
