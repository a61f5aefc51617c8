#pragma once

// Finite-state CSP kernel: terms, operational semantics, trace queries,
// normalisation and traces refinement.

#include <csp2turtle/csp/event.hpp>
#include <csp2turtle/csp/normalize.hpp>
#include <csp2turtle/csp/process.hpp>
#include <csp2turtle/csp/refinement.hpp>
#include <csp2turtle/csp/semantics.hpp>
#include <csp2turtle/csp/state_space.hpp>
#include <csp2turtle/csp/traces.hpp>
