#pragma once

#include <string>

#include "markovl2/certifier.hpp"

namespace markovl2 {

// Stable field order, big integers as decimal strings. Round trips: parsing
// the emitted text reconstructs an equivalent certificate (construction
// internals like psi are not serialized).
std::string certificate_to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const std::string& text);

void write_certificate(const BoundCertificate& cert, const std::string& path);
BoundCertificate read_certificate(const std::string& path);

}  // namespace markovl2
