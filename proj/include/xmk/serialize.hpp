#pragma once

#include <json.hpp>

#include "xmk/ddf.hpp"
#include "xmk/growth.hpp"
#include "xmk/partition.hpp"
#include "xmk/poly.hpp"
#include "xmk/tableau.hpp"
#include "xmk/virtual_vxr.hpp"
#include "xmk/word.hpp"
#include "xmk/xk.hpp"

namespace xmk {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"inner": [...], "outer": [...], "cells": [[row, col, value], ...]}, 0-based.
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// {"alphabet": ..., "widths": [...], "text": "..."}; widths from the rightmost factor.
Json to_json(const TensorWord& w, Diamond alphabet);
TensorWord word_from_json(const Json& j);

Json to_json(const HalfInteger& h);
HalfInteger half_integer_from_json(const Json& j);

/// Object keyed by twice the exponent.
Json to_json(const HalfGradedPoly& p);
HalfGradedPoly poly_from_json(const Json& j);

/// {"cycles": [[a, i], ...], "fixed": [...]}
Json to_json(const Involution& I);
Involution involution_from_json(const Json& j);

/// [[position, value], ...]
Json to_json(const Biword& w);
Biword biword_from_json(const Json& j);

Json to_json(const VxrOutput& v, Diamond d);
Json to_json(const DdfData& d, Diamond alphabet);
Json to_json(const XkReport& r);
Json to_json(const GrowthArray& a);

}  // namespace xmk
