#pragma once

#include <stdexcept>
#include <string>

namespace hsw {

// Domain errors carry a stable machine-readable name; the CLI prints the
// name on stderr and exits 1.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define HSW_DEFINE_ERROR(E)                                        \
    class E : public domain_error {                                \
    public:                                                        \
        explicit E(const std::string& what) : domain_error(#E, what) {} \
    }

HSW_DEFINE_ERROR(PreconditionViolation);
HSW_DEFINE_ERROR(MismatchedAmbient);
HSW_DEFINE_ERROR(ZeroClass);
HSW_DEFINE_ERROR(NegativeInput);
HSW_DEFINE_ERROR(NonNegativeInput);
HSW_DEFINE_ERROR(OutOfRange);
HSW_DEFINE_ERROR(OutOfCone);
HSW_DEFINE_ERROR(UnsupportedN);
HSW_DEFINE_ERROR(ProportionalInput);
HSW_DEFINE_ERROR(ZeroDegree);
HSW_DEFINE_ERROR(NotInCategory);
HSW_DEFINE_ERROR(InternalInconsistency);
HSW_DEFINE_ERROR(IoError);

#undef HSW_DEFINE_ERROR

} // namespace hsw
