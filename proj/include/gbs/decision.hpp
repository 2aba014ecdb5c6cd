#pragma once

#include <string>
#include <vector>

namespace gbs {

// Outcome of a decider, with the clause that settled it.
struct Decision {
  bool answer = false;
  std::string reason;                // the clause that fired
  std::vector<std::string> details;  // supporting facts, in evaluation order
  bool caveat = false;               // answer depends on the supplied representation
  std::string caveat_text;

  static Decision yes(std::string why) { return Decision{true, std::move(why), {}, false, {}}; }
  static Decision no(std::string why) { return Decision{false, std::move(why), {}, false, {}}; }
};

}  // namespace gbs
