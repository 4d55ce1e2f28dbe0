#pragma once

#include <stdexcept>
#include <string>

namespace adas {

// Base class for everything this library throws on purpose.
class model_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A single argument is outside the domain of an operation (negative
// tightness, unemployment rate outside (0,1), ...).
class domain_error : public model_error {
  public:
    using model_error::model_error;
};

// A whole parameter set is inconsistent, so no scenario can be built from
// it. The message names the violated condition.
class config_error : public model_error {
  public:
    using model_error::model_error;
};

// A solver broke down (lost bracket, iteration cap). For valid parameter
// sets this indicates an internal numerical problem, not user error.
class numeric_error : public model_error {
  public:
    using model_error::model_error;
};

} // namespace adas
