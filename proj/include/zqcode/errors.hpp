#pragma once

#include <stdexcept>
#include <string>

namespace zqcode {

/// An internal cross-check failed (non-integral count, non-monic constituent,
/// closed form disagreeing with the pipeline, ...). Maps to CLI exit code 2.
class consistency_error : public std::runtime_error {
  public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested work exceeds a configured budget. Maps to CLI exit code 3.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zqcode
