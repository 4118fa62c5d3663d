#ifndef PERMV_VERIFY_HPP
#define PERMV_VERIFY_HPP

#include <string>
#include <vector>

#include "permv/field.hpp"
#include "permv/groebner.hpp"

namespace permv {

// One replayable identity: a construction recipe, the expected object, and
// the provenance quote it came from. New identities are data, not code.
struct VerifyCheck {
    std::string id;
    // membership | nonmembership | colon | gb_reduced | gb_criterion |
    // ideal_equal | contract | alpha_lb
    std::string kind;
    std::string shape;
    std::vector<std::string> inputs;
    std::vector<std::string> expected;
    std::string provenance;
};

struct VerifyOutcome {
    std::string id;
    bool pass = false;
    std::string detail;
};

const std::vector<VerifyCheck>& verify_corpus();

VerifyOutcome run_check(const VerifyCheck& check, const FieldSpec& field,
                        const BuchbergerCaps& caps = {});

} // namespace permv

#endif
