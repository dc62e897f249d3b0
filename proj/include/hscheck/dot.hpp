#ifndef HSCHECK_DOT_HPP_
#define HSCHECK_DOT_HPP_

#include <string>
#include <vector>

#include "hscheck/model.hpp"

// Graphviz rendering of process templates: locations as nodes (committed
// ones double-bordered), edges annotated with guard / sync / update.

namespace hscheck {

std::string template_to_dot(const ProcessTemplate& t);

// One graph per template, in declaration order.
std::vector<std::string> system_to_dot(const SystemDef& sys);

}  // namespace hscheck

#endif  // HSCHECK_DOT_HPP_
