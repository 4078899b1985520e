#pragma once

// Text and line-delimited JSON renderings of check results.

#include "tarski/builtins.hpp"
#include "tarski/plane_models.hpp"
#include "tarski/search.hpp"

#include <string>

namespace tarski {

struct RecordOptions {
  /// Wall-clock fields make output differ between runs; off by default.
  bool timing = false;
};

std::string to_record(const ModelCheckReport& r, const RecordOptions& opt = {});
std::string to_text(const ModelCheckReport& r, const RecordOptions& opt = {});

std::string to_record(const NamedCheck& c);
std::string to_text(const NamedCheck& c);

std::string to_record(const SearchStats& s, const RecordOptions& opt = {});
std::string to_text(const SearchStats& s, const RecordOptions& opt = {});
std::string model_record(const FiniteModel& m);

}  // namespace tarski
