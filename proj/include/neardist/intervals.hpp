#pragma once

#include "neardist/geometry.hpp"

#include <string>
#include <vector>

namespace neardist {

enum class WindowMode { additive, multiplicative };

std::string to_string(WindowMode mode);
WindowMode parse_window_mode(const std::string& text);

/// Closed windows [t, t+L] (additive) or [t, t(1+eps)] (multiplicative).
/// `width` holds L or eps depending on the mode.
struct IntervalFamily {
    WindowMode mode = WindowMode::additive;
    std::vector<double> anchors;
    double width = 1.0;

    /// Throws InputError unless anchors are positive, strictly increasing and width > 0.
    void validate() const;

    double upper(double anchor) const;
    bool contains(double x) const;
    /// Index of the first window containing x, or -1.
    int window_of(double x) const;
};

/// Boundary-tolerant closed-window membership; both ends get kRelTol relative slack.
inline bool in_additive_window(double x, double anchor, double length, double rel_tol = kRelTol) {
    return x >= anchor * (1.0 - rel_tol) && x <= (anchor + length) * (1.0 + rel_tol);
}

inline bool in_multiplicative_window(double x, double anchor, double eps, double rel_tol = kRelTol) {
    return x >= anchor * (1.0 - rel_tol) && x <= anchor * (1.0 + eps) * (1.0 + rel_tol);
}

} // namespace neardist
