#pragma once

// Everything except the command-line front end.

#include "nno/decomposition.hpp"
#include "nno/fixtures.hpp"
#include "nno/generator.hpp"
#include "nno/graph.hpp"
#include "nno/hamiltonicity.hpp"
#include "nno/io.hpp"
#include "nno/longest_path.hpp"
#include "nno/oracle.hpp"
#include "nno/recognition.hpp"
#include "nno/steiner.hpp"
