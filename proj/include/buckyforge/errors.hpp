#pragma once

#include <stdexcept>
#include <string>

namespace buckyforge {

// Base class for all buckyforge error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input graph has a face walk that does not close up in three steps, or is
// disconnected: it is not a plane triangulation of the sphere.
struct NotTriangulation : Error {
  explicit NotTriangulation(const std::string& m = "not a triangulation") : Error(m) {}
};

// Triangulation whose degree sequence is not "twelve 5s, rest 6s".
struct WrongDegreeSpectrum : Error {
  explicit WrongDegreeSpectrum(const std::string& m = "wrong degree spectrum") : Error(m) {}
};

// Self-loop, repeated neighbor, or out-of-range vertex id in a rotation list.
struct NotSimple : Error {
  explicit NotSimple(const std::string& m = "graph is not simple") : Error(m) {}
};

// Rotation lists do not describe one consistently oriented embedding
// (e.g. some lists are clockwise and others counterclockwise).
struct InconsistentEmbedding : Error {
  explicit InconsistentEmbedding(const std::string& m = "inconsistent embedding") : Error(m) {}
};

// Operation requires an isolated-pentagon graph but was given one with
// adjacent 5-vertices.
struct NotIPR : Error {
  explicit NotIPR(const std::string& m = "graph has adjacent 5-vertices") : Error(m) {}
};

// A seed cache already holds a different graph set for the same key.
struct StoreConflict : Error {
  explicit StoreConflict(const std::string& m = "seed store conflict") : Error(m) {}
};

// Pentagon count outside 0..12 passed to a patch bound query.
struct InvalidPentagonCount : Error {
  explicit InvalidPentagonCount(const std::string& m = "pentagon count out of range") : Error(m) {}
};

// planar_code stream does not start with the expected header.
struct MalformedHeader : Error {
  explicit MalformedHeader(const std::string& m = "malformed planar_code header") : Error(m) {}
};

// planar_code stream ends in the middle of a record.
struct TruncatedRecord : Error {
  explicit TruncatedRecord(const std::string& m = "truncated planar_code record") : Error(m) {}
};

// Generation was asked to run without any usable seeds.
struct SeedsMissing : Error {
  explicit SeedsMissing(const std::string& m = "no seeds available") : Error(m) {}
};

// Output sink failed while a generation run was writing to it.
struct SinkFailure : Error {
  explicit SinkFailure(const std::string& m = "output sink failure") : Error(m) {}
};

}  // namespace buckyforge
