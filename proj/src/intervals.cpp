#include "neardist/intervals.hpp"

#include "neardist/errors.hpp"

#include <cmath>

namespace neardist {

std::string to_string(WindowMode mode) {
    return mode == WindowMode::additive ? "additive" : "multiplicative";
}

WindowMode parse_window_mode(const std::string& text) {
    if (text == "additive") {
        return WindowMode::additive;
    }
    if (text == "multiplicative") {
        return WindowMode::multiplicative;
    }
    throw InputError("unknown window mode '" + text + "'");
}

void IntervalFamily::validate() const {
    if (anchors.empty()) {
        throw InputError("interval family needs at least one window");
    }
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw InputError("window length/ratio must be positive");
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (!(anchors[i] > 0.0) || !std::isfinite(anchors[i])) {
            throw InputError("window anchors must be positive");
        }
        if (i > 0 && !(anchors[i] > anchors[i - 1])) {
            throw InputError("window anchors must be strictly increasing");
        }
    }
}

double IntervalFamily::upper(double anchor) const {
    return mode == WindowMode::additive ? anchor + width : anchor * (1.0 + width);
}

int IntervalFamily::window_of(double x) const {
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const bool in = mode == WindowMode::additive ? in_additive_window(x, anchors[i], width)
                                                     : in_multiplicative_window(x, anchors[i], width);
        if (in) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool IntervalFamily::contains(double x) const {
    return window_of(x) >= 0;
}

} // namespace neardist
