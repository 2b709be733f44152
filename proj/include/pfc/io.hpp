#pragma once

#include "pfc/asymptotics.hpp"
#include "pfc/linear_form.hpp"

#include <json.hpp>

namespace pfc {

using Json = nlohmann::ordered_json;

/// {"degree_bound", "entries": [{"partition", "value"}]}; zero entries are omitted.
Json to_json(const LinearForm& f);
LinearForm linear_form_from_json(const Json& j);

/// [{"exp", "num", "den"}] in ascending exponent order.
Json to_json(const LaurentScalar& x);
LaurentScalar laurent_from_json(const Json& j);

/// {"k", "terms": [{"partition", "laurent"}]}.
Json to_json(const AlgebraElement& e);
AlgebraElement algebra_element_from_json(const Json& j);

/// {"k", "n", "terms": [{"partition", "i", "laurent"}]}.
Json to_json(const FluctElement& e);
FluctElement fluct_element_from_json(const Json& j);

}  // namespace pfc
