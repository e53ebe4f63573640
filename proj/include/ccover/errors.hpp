#pragma once

#include <stdexcept>
#include <string>

namespace ccover {

// Malformed or out-of-contract input: bad coordinates, unknown ids,
// duplicate endpoints, schema violations.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A model premise does not hold: a layer is not a supergraph of G, or an
// operation needs an exact-intersection model and the instance is not one.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A base solver violated its declared contract (non-clique part, dependent
// "independent" set, or ratio above declared_phi).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact oracle refused an instance above its size cap.
struct OracleCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ccover
