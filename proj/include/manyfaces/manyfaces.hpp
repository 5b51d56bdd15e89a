#pragma once

#include "manyfaces/arrangement.hpp"
#include "manyfaces/cutting.hpp"
#include "manyfaces/dual.hpp"
#include "manyfaces/envelope_face.hpp"
#include "manyfaces/envelopes.hpp"
#include "manyfaces/face.hpp"
#include "manyfaces/generate.hpp"
#include "manyfaces/geometry.hpp"
#include "manyfaces/hull_chain.hpp"
#include "manyfaces/io.hpp"
#include "manyfaces/normalize.hpp"
#include "manyfaces/primal.hpp"
#include "manyfaces/rational.hpp"
#include "manyfaces/render.hpp"
#include "manyfaces/segment_envelope.hpp"
#include "manyfaces/solver.hpp"
