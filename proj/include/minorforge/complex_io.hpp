#pragma once

#include <json.hpp>

#include "minorforge/complex.hpp"

namespace minorforge {

/// {"skeleton": <graph JSON>, "cells": [[["e", id, dir], ...], ...]}.
/// A constant cell is written as [["v", vertex]].
nlohmann::json to_json(const TwoComplex& x);
/// Throws std::invalid_argument on malformed input or an invalid walk.
TwoComplex complex_from_json(const nlohmann::json& j);

}  // namespace minorforge
