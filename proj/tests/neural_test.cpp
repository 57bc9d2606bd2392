// Copyright 2026 The GRT Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grt/datagen.hpp"
#include "grt/errors.hpp"
#include "grt/neural.hpp"
#include "oracle/reference.hpp"

#include "gtest/gtest.h"

#include <cmath>
#include <set>
#include <sstream>

using namespace grt;

namespace {

std::vector<std::string> terminals() { return defaultGrammar().terminalNames(); }

std::vector<Example> randomBatch(Rng &R, std::size_t N, std::size_t Outputs) {
  std::vector<Example> B;
  for (std::size_t I = 0; I < N; ++I) {
    IoConstraint C{{oracle::randomString(R, 10)}, oracle::randomString(R, 10)};
    Example E{encode(C), {}};
    for (std::size_t K = 0; K < Outputs; ++K)
      E.Y.push_back(static_cast<std::uint8_t>(R.below(2)));
    B.push_back(E);
  }
  return B;
}

} // namespace

TEST(EncodeTest, WorkedExamples) {
  EncodedPair Zero{};
  EXPECT_EQ(encode({{""}, ""}), Zero);

  EncodedPair Ab{};
  Ab[0] = 97;
  Ab[1] = 98;
  Ab[20] = 98;
  EXPECT_EQ(encode({{"ab"}, "b"}), Ab);

  EncodedPair Long = encode({{"123456789012345678901234"}, "z"});
  for (std::size_t I = 0; I < FieldLength; ++I)
    EXPECT_EQ(Long[I], "12345678901234567890"[I]);
  EXPECT_EQ(Long[20], 'z');
}

TEST(EncodeTest, SeparatorAndHighBytes) {
  EncodedPair E = encode({{"a", "b"}, "\xC3"});
  EXPECT_EQ(E[0], 'a');
  EXPECT_EQ(E[1], InputSeparator);
  EXPECT_EQ(E[2], 'b');
  EXPECT_EQ(E[20], 127);
}

TEST(EncodeTest, InjectiveOnShortAscii) {
  Rng R(4);
  std::set<EncodedPair> Seen;
  std::set<std::pair<std::string, std::string>> Pairs;
  for (int I = 0; I < 2000; ++I) {
    std::string In, Out;
    for (std::size_t K = R.below(5); K > 0; --K)
      In.push_back(static_cast<char>('a' + R.below(3)));
    for (std::size_t K = R.below(5); K > 0; --K)
      Out.push_back(static_cast<char>('a' + R.below(3)));
    if (Pairs.insert({In, Out}).second) {
      EXPECT_TRUE(Seen.insert(encode({{In}, Out})).second);
    }
  }
}

TEST(LayerSizeTest, MatchesExactOracle) {
  EXPECT_EQ(hiddenLayerSizes(100, 15, 3), (std::vector<std::size_t>{73, 53, 39}));
  for (std::size_t Out : {1, 2, 15, 37, 99, 100})
    for (std::size_t Hidden : {1, 2, 3, 5})
      EXPECT_EQ(hiddenLayerSizes(100, Out, Hidden),
                oracle::exactLayerSizes(100, Out, Hidden))
          << Out << " " << Hidden;
  EXPECT_EQ(hiddenLayerSizes(100, 100, 3), (std::vector<std::size_t>{100, 100, 100}));
  EXPECT_THROW(hiddenLayerSizes(0, 5, 3), DegenerateShape);
}

TEST(LayerSizeTest, StrictlyDecreasing) {
  auto S = hiddenLayerSizes(100, 15, 3);
  EXPECT_GT(100u, S[0]);
  EXPECT_GT(S[0], S[1]);
  EXPECT_GT(S[1], S[2]);
  EXPECT_GT(S[2], 15u);
}

TEST(ForwardTest, ZeroWeightsGiveHalf) {
  ModelWeights W = zeroWeights(terminals());
  for (double P : forward(W, encode({{"abc"}, "a"})))
    EXPECT_DOUBLE_EQ(P, 0.5);
  auto Bits = predictBits(W, {{"abc"}, "a"}, 0.5);
  EXPECT_EQ(std::count(Bits.begin(), Bits.end(), 1), 15);
}

TEST(ForwardTest, ShapeLaw) {
  ModelWeights W = initWeights(terminals(), 1);
  EXPECT_EQ(W.LayerDims, (std::vector<std::size_t>{100, 73, 53, 39, 15}));
  EXPECT_EQ(W.Embedding.Rows, VocabSize);
  EXPECT_EQ(W.Embedding.Cols, EmbeddingDim);
  W.Hidden[1].Bias.pop_back();
  EXPECT_THROW(W.checkShape(), ShapeMismatch);
  EXPECT_THROW(forward(W, encode({{"a"}, "b"})), ShapeMismatch);
}

TEST(ForwardTest, EvalDeterministicAndInOpenUnitInterval) {
  ModelWeights W = initWeights(terminals(), 2);
  EncodedPair X = encode({{"555-1234"}, "555"});
  auto A = forward(W, X), B = forward(W, X);
  EXPECT_EQ(A, B);
  for (double P : A) {
    EXPECT_GT(P, 0.0);
    EXPECT_LT(P, 1.0);
  }
  EXPECT_NE(forward(W, X, true, 1), forward(W, X, true, 2));
}

TEST(ForwardTest, DropoutExpectation) {
  ModelWeights W = initWeights(terminals(), 3);
  EncodedPair X = encode({{"hello world"}, "world"});
  auto Eval = forward(W, X);
  std::vector<double> Mean(Eval.size(), 0.0);
  const int Draws = 4000;
  for (int S = 0; S < Draws; ++S) {
    auto P = forward(W, X, true, static_cast<std::uint64_t>(S));
    for (std::size_t I = 0; I < P.size(); ++I)
      Mean[I] += P[I] / Draws;
  }
  for (std::size_t I = 0; I < Eval.size(); ++I)
    EXPECT_NEAR(Mean[I], Eval[I], 1e-2);
}

TEST(GradientTest, CentralDifferences) {
  Rng R(12);
  for (int Config = 0; Config < 3; ++Config) {
    ModelWeights W = initWeights(terminals(), 100 + Config);
    auto Batch = randomBatch(R, 3, W.numOutputs());
    ModelWeights Grad = zeroWeights(terminals());
    lossAndGradient(W, Batch, &Grad);
    auto Params = W.parameters();
    auto Grads = Grad.parameters();
    for (std::size_t A = 0; A < Params.size(); ++A) {
      for (int K = 0; K < 20; ++K) {
        std::size_t I = R.below(Params[A].size());
        double Keep = Params[A][I];
        const double H = 1e-4;
        Params[A][I] = Keep + H;
        double Up = lossAndGradient(W, Batch, nullptr);
        Params[A][I] = Keep - H;
        double Down = lossAndGradient(W, Batch, nullptr);
        Params[A][I] = Keep;
        double Numeric = (Up - Down) / (2 * H);
        double Analytic = Grads[A][I];
        double Scale = std::max({std::abs(Numeric), std::abs(Analytic), 1e-6});
        EXPECT_LT(std::abs(Numeric - Analytic) / Scale, 1e-4)
            << "array " << A << " index " << I;
      }
    }
  }
}

TEST(TrainTest, MemorizesOneSample) {
  auto Names = terminals();
  CritSample S{{{"abc-def"}, "def"}, std::vector<std::uint8_t>(15, 0), "p0", ""};
  S.Label[0] = S.Label[3] = S.Label[5] = 1;
  TrainConfig Cfg;
  Cfg.Epochs = 200;
  Cfg.BatchSize = 1;
  Cfg.DropoutRate = 0.0;
  Cfg.LearningRate = 1e-2;
  TrainResult T = train({S}, Names, Cfg);
  auto P = forward(T.Weights, encode(S.Constraint));
  for (std::size_t I = 0; I < P.size(); ++I)
    EXPECT_NEAR(P[I], S.Label[I], 0.1) << Names[I];
}

TEST(TrainTest, OrderIndependentAndSeeded) {
  Grammar G = defaultGrammar();
  auto Data = genCritDataset(G, 60, 3, 0);
  TrainConfig Cfg;
  Cfg.Epochs = 2;
  Cfg.BatchSize = 16;
  Cfg.Seed = 5;
  TrainResult A = train(Data, G.terminalNames(), Cfg);
  std::reverse(Data.begin(), Data.end());
  TrainResult B = train(Data, G.terminalNames(), Cfg);
  EXPECT_EQ(A.Weights, B.Weights);
  EXPECT_EQ(A.EpochLoss, B.EpochLoss);
  Cfg.Seed = 6;
  EXPECT_NE(train(Data, G.terminalNames(), Cfg).Weights, A.Weights);
}

TEST(TrainTest, RejectsBadConfig) {
  TrainConfig Cfg;
  Cfg.DropoutRate = 1.0;
  EXPECT_THROW(Cfg.validate(), Error);
  Cfg = {};
  Cfg.BatchSize = 0;
  EXPECT_THROW(Cfg.validate(), Error);
}

TEST(PredictBitsTest, MonotoneInThreshold) {
  ModelWeights W = initWeights(terminals(), 9);
  IoConstraint C{{"Ada Lovelace"}, "AL"};
  std::size_t Last = 16;
  for (double T : {0.01, 0.2, 0.4, 0.5, 0.6, 0.8, 0.999}) {
    auto Bits = predictBits(W, C, T);
    auto N = static_cast<std::size_t>(std::count(Bits.begin(), Bits.end(), 1));
    EXPECT_LE(N, Last);
    Last = N;
  }
}

TEST(WeightsIoTest, RoundTripIsByteEqual) {
  ModelWeights W = initWeights(terminals(), 4);
  std::ostringstream A;
  writeWeights(A, W);
  std::istringstream In(A.str());
  ModelWeights Back = readWeights(In, terminals());
  EXPECT_EQ(Back, W);
  std::ostringstream B;
  writeWeights(B, Back);
  EXPECT_EQ(A.str(), B.str());
}

TEST(WeightsIoTest, RefusesOtherTerminalOrder) {
  ModelWeights W = initWeights(terminals(), 4);
  std::ostringstream A;
  writeWeights(A, W);
  auto Swapped = terminals();
  std::swap(Swapped[0], Swapped[1]);
  std::istringstream In(A.str());
  EXPECT_THROW(readWeights(In, Swapped), FormatError);
  std::istringstream Cut(A.str().substr(0, A.str().size() - 3));
  EXPECT_THROW(readWeights(Cut, terminals()), FormatError);
  std::istringstream Extra(A.str() + "x");
  EXPECT_THROW(readWeights(Extra, terminals()), FormatError);
}
