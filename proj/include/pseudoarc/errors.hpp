#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudoarc {

// Domain error with a stable kind tag; data carries witnesses such as index pairs.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg, std::vector<std::int64_t> data = {})
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)), data_(std::move(data)) {}

  const std::string& kind() const { return kind_; }
  const std::vector<std::int64_t>& data() const { return data_; }

 private:
  std::string kind_;
  std::vector<std::int64_t> data_;
};

}  // namespace pseudoarc
