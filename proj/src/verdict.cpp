#include "factor/verdict.hpp"

#include <stdexcept>

#include "factor/errors.hpp"

namespace factor {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::T11: return "11";
    case Condition::T12: return "12";
    case Condition::T13: return "13";
    case Condition::T14: return "14";
    case Condition::T15: return "15";
  }
  return "?";
}

Condition condition_from_number(int number) {
  switch (number) {
    case 11: return Condition::T11;
    case 12: return Condition::T12;
    case 13: return Condition::T13;
    case 14: return Condition::T14;
    case 15: return Condition::T15;
    default:
      throw Error(ErrorKind::InvalidParameters,
                  "condition number must be one of 11, 12, 13, 14, 15");
  }
}

int condition_number(Condition c) {
  switch (c) {
    case Condition::T11: return 11;
    case Condition::T12: return 12;
    case Condition::T13: return 13;
    case Condition::T14: return 14;
    case Condition::T15: return 15;
  }
  return 0;
}

ConditionVerdict not_applicable(Condition c, std::string reason) {
  ConditionVerdict v;
  v.condition = c;
  v.applicable = false;
  v.reason = std::move(reason);
  return v;
}

}  // namespace factor
