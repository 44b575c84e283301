#pragma once

#include "doctest.h"
#include "symquot/series.hpp"

namespace doctest {

template <>
struct StringMaker<symquot::TruncatedSeries> {
  static String convert(const symquot::TruncatedSeries& s) { return symquot::to_string(s).c_str(); }
};

template <>
struct StringMaker<symquot::Polynomial<symquot::Integer>> {
  static String convert(const symquot::Polynomial<symquot::Integer>& p) { return symquot::to_string(p).c_str(); }
};

template <>
struct StringMaker<symquot::HilbertSeries> {
  static String convert(const symquot::HilbertSeries& h) { return symquot::to_string(h).c_str(); }
};

}  // namespace doctest
