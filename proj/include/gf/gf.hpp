// Umbrella header.
#ifndef GF_GF_HPP_
#define GF_GF_HPP_

#include "config.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "flat_gauge.hpp"
#include "functor.hpp"
#include "gauge.hpp"
#include "groupoid.hpp"
#include "histories.hpp"
#include "io.hpp"
#include "local_sheaf.hpp"
#include "probing.hpp"
#include "reconstruction.hpp"
#include "structure.hpp"

#endif  // GF_GF_HPP_
