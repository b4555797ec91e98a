#ifndef FERMATKIT_ERRORS_HPP
#define FERMATKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fk {

// Error kinds map onto CLI exit codes: bad_input -> 2, data_gap -> 3,
// inconsistency -> 4.  A computed negative verdict is not an error.
enum class error_kind { bad_input, data_gap, inconsistency };

class error : public std::runtime_error {
  public:
    error(error_kind k, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(k) {}
    error_kind kind() const { return kind_; }
    int exit_code() const {
        switch (kind_) {
            case error_kind::bad_input: return 2;
            case error_kind::data_gap: return 3;
            case error_kind::inconsistency: return 4;
        }
        return 4;
    }

  private:
    error_kind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw error(error_kind::bad_input, msg);
}
[[noreturn]] inline void fail_data(const std::string& msg) {
    throw error(error_kind::data_gap, msg);
}
[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw error(error_kind::inconsistency, msg);
}

}  // namespace fk

#endif
