#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <string>

namespace capt {

using WarningSink = std::function<void(const std::string&)>;

inline void stderr_warning(const std::string& msg) {
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::cerr << "warning: " << msg << '\n';
}

}  // namespace capt
