#pragma once

#include <cstdint>

// BLS12-381 curve constants. Limb arrays are little-endian base-2^64, values canonical
// (not Montgomery) unless noted. p is the base field prime, r the subgroup order.

namespace sdcred::detail {

inline constexpr std::uint64_t kFpModulus[6] = {0xb9feffffffffaaabull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull};
inline constexpr std::uint64_t kFpInv = 0x89f3fffcfffcfffdull;  // -p^-1 mod 2^64
inline constexpr std::uint64_t kFpR[6] = {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull};        // 2^384 mod p
inline constexpr std::uint64_t kFpR2[6] = {0xf4df1f341c341746ull, 0x0a76e6a609d104f1ull, 0x8de5476c4c95b6d5ull, 0x67eb88a9939d83c0ull, 0x9a793e85b519952dull, 0x11988fe592cae3aaull};       // 2^768 mod p
inline constexpr std::uint64_t kFpPplus1Div4[6] = {0xee7fbfffffffeaabull, 0x07aaffffac54ffffull, 0xd9cc34a83dac3d89ull, 0xd91dd2e13ce144afull, 0x92c6e9ed90d2eb35ull, 0x0680447a8e5ff9a6ull};
inline constexpr std::uint64_t kFpPminus1Div2[6] = {0xdcff7fffffffd555ull, 0x0f55ffff58a9ffffull, 0xb39869507b587b12ull, 0xb23ba5c279c2895full, 0x258dd3db21a5d66bull, 0x0d0088f51cbff34dull};
inline constexpr std::uint64_t kFpPminus2[6] = {0xb9feffffffffaaa9ull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull};

inline constexpr std::uint64_t kFrModulus[4] = {0xffffffff00000001ull, 0x53bda402fffe5bfeull, 0x3339d80809a1d805ull, 0x73eda753299d7d48ull};
inline constexpr std::uint64_t kFrInv = 0xfffffffeffffffffull;  // -r^-1 mod 2^64
inline constexpr std::uint64_t kFrR[4] = {0x00000001fffffffeull, 0x5884b7fa00034802ull, 0x998c4fefecbc4ff5ull, 0x1824b159acc5056full};   // 2^256 mod r
inline constexpr std::uint64_t kFrR2[4] = {0xc999e990f3f29c6dull, 0x2b6cedcb87925c23ull, 0x05d314967254398full, 0x0748d9d99f59ff11ull};  // 2^512 mod r
inline constexpr std::uint64_t kFrRminus2[4] = {0xfffffffeffffffffull, 0x53bda402fffe5bfeull, 0x3339d80809a1d805ull, 0x73eda753299d7d48ull};

// |z| for the BLS parameter z = -0xd201000000010000; Miller loop and G2 fast maps run over it.
inline constexpr std::uint64_t kBlsXAbs = 0xd201000000010000ull;
inline constexpr std::uint64_t kG1HEff = 0xd201000000010001ull;  // 1 - z

inline constexpr std::uint64_t kG1GenX[6] = {0xfb3af00adb22c6bbull, 0x6c55e83ff97a1aefull, 0xa14e3a3f171bac58ull, 0xc3688c4f9774b905ull, 0x2695638c4fa9ac0full, 0x17f1d3a73197d794ull};
inline constexpr std::uint64_t kG1GenY[6] = {0x0caa232946c5e7e1ull, 0xd03cc744a2888ae4ull, 0x00db18cb2c04b3edull, 0xfcf5e095d5d00af6ull, 0xa09e30ed741d8ae4ull, 0x08b3f481e3aaa0f1ull};
inline constexpr std::uint64_t kG2GenX[2][6] = {{0xd48056c8c121bdb8ull, 0x0bac0326a805bbefull, 0xb4510b647ae3d177ull, 0xc6e47ad4fa403b02ull, 0x260805272dc51051ull, 0x024aa2b2f08f0a91ull}, {0xe5ac7d055d042b7eull, 0x334cf11213945d57ull, 0xb5da61bbdc7f5049ull, 0x596bd0d09920b61aull, 0x7dacd3a088274f65ull, 0x13e02b6052719f60ull}};
inline constexpr std::uint64_t kG2GenY[2][6] = {{0xe193548608b82801ull, 0x923ac9cc3baca289ull, 0x6d429a695160d12cull, 0xadfd9baa8cbdd3a7ull, 0x8cc9cdc6da2e351aull, 0x0ce5d527727d6e11ull}, {0xaaa9075ff05f79beull, 0x3f370d275cec1da1ull, 0x267492ab572e99abull, 0xcb3e287e85a763afull, 0x32acd2b02bc28b99ull, 0x0606c4a02ea734ccull}};

// Frobenius: coefficient of w^j under x -> x^(p^k) in the flat basis, k = 1..3.
inline constexpr std::uint64_t kFrobW[3][6][2][6] = {
  {{{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x8d0775ed92235fb8ull, 0xf67ea53d63e7813dull, 0x7b2443d784bab9c4ull, 0x0fd603fd3cbd5f4full, 0xc231beb4202c0d1full, 0x1904d3bf02bb0667ull}, {0x2cf78a126ddc4af3ull, 0x282d5ac14d6c7ec2ull, 0xec0c8ec971f63c5full, 0x54a14787b6c7b36full, 0x88e9e902231f9fb8ull, 0x00fc3e2b36c4e032ull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x8bfd00000000aaacull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}},
    {{0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}, {0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}},
    {{0x8bfd00000000aaadull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x9b18fae980078116ull, 0xc63a3e6e257f8732ull, 0x8beadf4d8e9c0566ull, 0xf39816240c0b8feeull, 0xdf47fa6b48b1e045ull, 0x05b2cfd9013a5fd8ull}, {0x1ee605167ff82995ull, 0x5871c1908bd478cdull, 0xdb45f3536814f0bdull, 0x70df3560e77982d0ull, 0x6bd3ad4afa99cc91ull, 0x144e4211384586c1ull}}},
  {{{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x2e01fffffffeffffull, 0xde17d813620a0002ull, 0xddb3a93be6f89688ull, 0xba69c6076a0f77eaull, 0x5f19672fdf76ce51ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x2e01fffffffefffeull, 0xde17d813620a0002ull, 0xddb3a93be6f89688ull, 0xba69c6076a0f77eaull, 0x5f19672fdf76ce51ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0xb9feffffffffaaaaull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x8bfd00000000aaacull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x8bfd00000000aaadull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}},
  {{{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}, {0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}, {0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}},
    {{0xb9feffffffffaaaaull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}, {0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}}},
};

// psi(x, y) = (kPsiX * conj(x), kPsiY * conj(y)) on the twist.
inline constexpr std::uint64_t kPsiX[2][6] = {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x8bfd00000000aaadull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}};
inline constexpr std::uint64_t kPsiY[2][6] = {{0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}, {0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}};

// Simplified SWU constants: the 11-isogenous curve to E1 and the 3-isogenous curve to E2.
inline constexpr std::uint64_t kSswuG1A[6] = {0x5cf428082d584c1dull, 0x98936f8da0e0f97full, 0xd8e8981aefd881acull, 0xb0ea985383ee66a8ull, 0x3d693a02c96d4982ull, 0x00144698a3b8e943ull};
inline constexpr std::uint64_t kSswuG1B[6] = {0xd1cc48e98e172be0ull, 0x5a23215a316ceaa5ull, 0xa0b9c14fcef35ef5ull, 0x2016c1f0f24f4070ull, 0x018b12e8753eee3bull, 0x12e2908d11688030ull};
inline constexpr std::uint64_t kSswuG1Z[6] = {0x000000000000000bull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull};
inline constexpr std::uint64_t kSswuG2A[2][6] = {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x00000000000000f0ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}};
inline constexpr std::uint64_t kSswuG2B[2][6] = {{0x00000000000003f4ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x00000000000003f4ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}};
inline constexpr std::uint64_t kSswuG2Z[2][6] = {{0xb9feffffffffaaa9ull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}, {0xb9feffffffffaaaaull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}};

inline constexpr std::uint64_t kIso11XNum[12][6] = {
    {0xaeac1662734649b7ull, 0x5610c2d5f2e62d6eull, 0xf2627b56cdb4e2c8ull, 0x6b303e88a2d7005full, 0xb809101dd9981585ull, 0x11a05f2b1e833340ull},
    {0xe834eef1b3cb83bbull, 0x4838f2a6f318c356ull, 0xf565e33c70d1e86bull, 0x7c17e75b2f6a8417ull, 0x0588bab22147a81cull, 0x17294ed3e943ab2full},
    {0xe0179f9dac9edcb0ull, 0x958c3e3d2a09729full, 0x6878e501ec68e25cull, 0xce032473295983e5ull, 0x1d1048c5d10a9a1bull, 0x0d54005db97678ecull},
    {0xc5b388641d9b6861ull, 0x5336e25ce3107193ull, 0xf1b33289f1b33083ull, 0xd7f5e4656a8dbf25ull, 0x4e0609d307e55412ull, 0x1778e7166fcc6db7ull},
    {0x51154ce9ac8895d9ull, 0x985a286f301e77c4ull, 0x086eeb65982fac18ull, 0x99db995a1257fb3full, 0x6642b4b3e4118e54ull, 0x0e99726a3199f443ull},
    {0xcd13c1c66f652983ull, 0xa0870d2dcae73d19ull, 0x9ed3ab9097e68f90ull, 0xdb3cb17dd952799bull, 0x01d1201bf7a74ab5ull, 0x1630c3250d7313ffull},
    {0xddd7f225a139ed84ull, 0x8da25128c1052ecaull, 0x9008e218f9c86b2aull, 0xb11586264f0f8ce1ull, 0x6a3726c38ae652bfull, 0x0d6ed6553fe44d29ull},
    {0x9ccb5618e3f0c88eull, 0x39b7c8f8c8f475afull, 0xa682c62ef0f27533ull, 0x356de5ab275b4db1ull, 0xe8743884d1117e53ull, 0x17b81e7701abdbe2ull},
    {0x6d71986a8497e317ull, 0x4fa295f296b74e95ull, 0xa2c596c928c5d1deull, 0xc43b756ce79f5574ull, 0x7b90b33563be990dull, 0x080d3cf1f9a78fc4ull},
    {0x7f241067be390c9eull, 0xa3190b2edc032779ull, 0x676314baf4bb1b7full, 0xdd2ecb803a0c5c99ull, 0x2e0c37515d138f22ull, 0x169b1f8e1bcfa7c4ull},
    {0xca67df3f1605fb7bull, 0xf69b771f8c285decull, 0xd50af36003b14866ull, 0xfa7dccdde6787f96ull, 0x72d8ec09d2565b0dull, 0x10321da079ce07e2ull},
    {0xa9c8ba2e8ba2d229ull, 0xc24b1b80b64d391full, 0x23c0bf1bc24c6b68ull, 0x31d79d7e22c837bcull, 0xbd1e962381edee3dull, 0x06e08c248e260e70ull}};
inline constexpr std::uint64_t kIso11XDen[11][6] = {
    {0x993cf9fa40d21b1cull, 0xb558d681be343df8ull, 0x9c9588617fc8ac62ull, 0x01d5ef4ba35b48baull, 0x18b2e62f4bd3fa6full, 0x08ca8d548cff19aeull},
    {0xe5c8276ec82b3bffull, 0x13daa8846cb026e9ull, 0x0126c2588c48bf57ull, 0x7041e8ca0cf0800cull, 0x48b4711298e53636ull, 0x12561a5deb559c43ull},
    {0xfcc239ba5cb83e19ull, 0xd6a3d0967c94fedcull, 0xfca64e00b11aceacull, 0x6f89416f5a718cd1ull, 0x8137e629bff2991full, 0x0b2962fe57a3225eull},
    {0x130de8938dc62cd8ull, 0x4976d5243eecf5c4ull, 0x54cca8abc28d6fd0ull, 0x5b08243f16b16551ull, 0xc83aafef7c40eb54ull, 0x03425581a58ae2feull},
    {0x539d395b3532a21eull, 0x9bd29ba81f35781dull, 0x8d6b44e833b306daull, 0xffdfc759a12062bbull, 0x0a6f1d5f43e7a07dull, 0x13a8e162022914a8ull},
    {0xc02df9a29f6304a5ull, 0x7400d24bc4228f11ull, 0x0a43bcef24b8982full, 0x395735e9ce9cad4dull, 0x55390f7f0506c6e9ull, 0x0e7355f8e4e667b9ull},
    {0xec2574496ee84a3aull, 0xea73b3538f0de06cull, 0x4e2e073062aede9cull, 0x570f5799af53a189ull, 0x0f3e0c63e0596721ull, 0x0772caacf1693619ull},
    {0x11f7d99bbdcc5a5eull, 0x0fa5b9489d11e2d3ull, 0x1996e1cdf9822c58ull, 0x6e7f63c21bca68a8ull, 0x30b3f5b074cf0199ull, 0x14a7ac2a9d64a8b2ull},
    {0x4776ec3a79a1d641ull, 0x03826692abba4370ull, 0x74100da67f398835ull, 0xe07f8d1d7161366bull, 0x5e920b3dafc7a3ccull, 0x0a10ecf6ada54f82ull},
    {0x2d6384d168ecdd0aull, 0x93174e4b4b786500ull, 0x76df533978f31c15ull, 0xf682b4ee96f7d037ull, 0x476d6e3eb3a56680ull, 0x095fc13ab9e92ad4ull},
    {0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}};
inline constexpr std::uint64_t kIso11YNum[16][6] = {
    {0xbe9845719707bb33ull, 0xcd0c7aee9b3ba3c2ull, 0x2b52af6c956543d3ull, 0x11ad138e48a86952ull, 0x259d1f094980dcfaull, 0x090d97c81ba24ee0ull},
    {0xe097e75a2e41c696ull, 0xd6c56711962fa8bfull, 0x0f906343eb67ad34ull, 0x1223e96c254f383dull, 0xd51036d776fb4683ull, 0x134996a104ee5811ull},
    {0xb8dfe240c72de1f6ull, 0xd26d521628b00523ull, 0xc344be4b91400da7ull, 0x2552e2d658a31ce2ull, 0xf4a384c86a3b4994ull, 0x00cc786baa966e66ull},
    {0xa6355c77b0e5f4cbull, 0xde405aba9ec61decull, 0x09e4a3ec03251cf9ull, 0xd42aa7b90eeb791cull, 0x7898751ad8746757ull, 0x01f86376e8981c21ull},
    {0x41b6daecf2e8fedbull, 0x2ee7f8dc099040a8ull, 0x79833fd221351adcull, 0x195536fbe3ce50b8ull, 0x5caf4fe2a21529c4ull, 0x08cc03fdefe0ff13ull},
    {0x99b23ab13633a5f0ull, 0x203f6326c95a8072ull, 0x76505c3d3ad5544eull, 0x74a7d0d4afadb7bdull, 0x2211e11db8f0a6a0ull, 0x16603fca40634b6aull},
    {0xc961f8855fe9d6f2ull, 0x47a87ac2460f415eull, 0x5231413c4d634f37ull, 0xe75bb8ca2be184cbull, 0xb2c977d027796b3cull, 0x04ab0b9bcfac1bbcull},
    {0xa15e4ca31870fb29ull, 0x42f64550fedfe935ull, 0xfd038da6c26c8426ull, 0x170a05bfe3bdd81full, 0xde9926bd2ca6c674ull, 0x0987c8d5333ab86full},
    {0x60370e577bdba587ull, 0x69d65201c78607a3ull, 0x1e8b6e6a1f20cabeull, 0x8f3abd16679dc26cull, 0xe88c9e221e4da1bbull, 0x09fc4018bd96684bull},
    {0x2bafaaebca731c30ull, 0x9b3f7055dd4eba6full, 0x06985e7ed1e4d43bull, 0xc42a0ca7915af6feull, 0x223abde7ada14a23ull, 0x0e1bba7a1186bdb5ull},
    {0xe813711ad011c132ull, 0x31bf3a5cce3fbafcull, 0xd1183e416389e610ull, 0xcd2fcbcb6caf493full, 0x0dfd0b8f1d43fb93ull, 0x19713e47937cd1beull},
    {0xce07c8a4d0074d8eull, 0x49d9cdf41b44d606ull, 0x2e6bfe7f911f6432ull, 0x523559b8aaf0c246ull, 0xb918c143fed2edccull, 0x18b46a908f36f6deull},
    {0x0d4c04f00b971ef8ull, 0x06c851c1919211f2ull, 0xc02710e807b4633full, 0x7aa7b12a3426b08eull, 0xd155096004f53f44ull, 0x0b182cac101b9399ull},
    {0x42d9d3f5db980133ull, 0xc6cf90ad1c232a64ull, 0x13e6632d3c40659cull, 0x757b3b080d4c1580ull, 0x72fc00ae7be315dcull, 0x0245a394ad1eca9bull},
    {0x866b1e715475224bull, 0x6ba1049b6579afb7ull, 0xd9ab0f5d396a7ce4ull, 0x5e673d81d7e86568ull, 0x02a159f748c4a3fcull, 0x05c129645e44cf11ull},
    {0x04b456be69c8b604ull, 0xb665027efec01c77ull, 0x57add4fa95af01b2ull, 0xcb181d8f84965a39ull, 0x4ea50b3b42df2eb5ull, 0x15e6be4e990f03ceull}};
inline constexpr std::uint64_t kIso11YDen[16][6] = {
    {0x01479253b03663c1ull, 0x07f3688ef60c206dull, 0xeec3232b5be72e7aull, 0x601a6de578980be6ull, 0x52181140fad0eae9ull, 0x16112c4c3a9c98b2ull},
    {0x32f6102c2e49a03dull, 0x78a4260763529e35ull, 0xa4a10356f453e01full, 0x85c84ff731c4d59cull, 0x1a0cbd6c43c348b8ull, 0x1962d75c2381201eull},
    {0x1e2538b53dbf67f2ull, 0xa6757cd636f96f89ull, 0x0c35a5dd279cd2ecull, 0x78c4855551ae7f31ull, 0x6faaae7d6e8eb157ull, 0x058df3306640da27ull},
    {0xa8d26d98445f5416ull, 0x727364f2c28297adull, 0x123da489e726af41ull, 0xd115c5dbddbcd30eull, 0xf20d23bf89edb4d1ull, 0x16b7d288798e5395ull},
    {0xda39142311a5001dull, 0xa20b15dc0fd2ededull, 0x542eda0fc9dec916ull, 0xc6d19c9f0f69bbb0ull, 0xb00cc912f8228ddcull, 0x0be0e079545f43e4ull},
    {0x02c6477faaf9b7acull, 0x49f38db9dfa9cce2ull, 0xc5ecd87b6f0f5a64ull, 0xb70152c65550d881ull, 0x9fb266eaac783182ull, 0x08d9e5297186db2dull},
    {0x3d1a1399126a775cull, 0xd5fa9c01a58b1fb9ull, 0x5dd365bc400a0051ull, 0x5eecfdfa8d0cf8efull, 0xc3ba8734ace9824bull, 0x166007c08a99db2full},
    {0x60ee415a15812ed9ull, 0xb920f5b00801dee4ull, 0xfeb34fd206357132ull, 0xe5a4375efa1f4fd7ull, 0x03bcddfabba6ff6eull, 0x16a3ef08be3ea7eaull},
    {0x6b233d9d55535d4aull, 0x52cfe2f7bb924883ull, 0xabc5750c4bf39b48ull, 0xf9fb0ce4c6af5920ull, 0x1a1be54fd1d74cc4ull, 0x1866c8ed336c6123ull},
    {0x346ef48bb8913f55ull, 0xc7385ea3d529b35eull, 0x5308592e7ea7d4fbull, 0x3216f763e13d87bbull, 0xea820597d94a8490ull, 0x167a55cda70a6e1cull},
    {0x00f8b49cba8f6aa8ull, 0x71a5c29f4f830604ull, 0x0e591b36e636a5c8ull, 0x9c6dd039bb61a629ull, 0x48f010a01ad2911dull, 0x04d2f259eea405bdull},
    {0x9684b529e2561092ull, 0x16f968986f7ebbeaull, 0x8c0f9a88cea79135ull, 0x7f94ff8aefce42d2ull, 0xf5852c1e48c50c47ull, 0x0accbb67481d033full},
    {0x1e99b138573345ccull, 0x93000763e3b90ac1ull, 0x7d5ceef9a00d9b86ull, 0x543346d98adf0226ull, 0xc3613144b45f1496ull, 0x0ad6b9514c767fe3ull},
    {0xd1fadc1326ed06f7ull, 0x420517bd8714cc80ull, 0xcb748df27942480eull, 0xbf565b94e72927c1ull, 0x628bdd0d53cd76f2ull, 0x02660400eb2e4f3bull},
    {0x4415473a1d634b8full, 0x5ca2f570f1349780ull, 0x324efcd6356caa20ull, 0x71c40f65e273b853ull, 0x6b24255e0d7819c1ull, 0x0e0fa1d816ddc03eull},
    {0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}};

inline constexpr std::uint64_t kIso3XNum[4][2][6] = {
    {{0x6238aaaaaaaa97d6ull, 0x5c2638e343d9c71cull, 0x88b58423c50ae15dull, 0x32c52d39fd3a042aull, 0xbb5b7a9a47d7ed85ull, 0x05c759507e8e333eull}, {0x6238aaaaaaaa97d6ull, 0x5c2638e343d9c71cull, 0x88b58423c50ae15dull, 0x32c52d39fd3a042aull, 0xbb5b7a9a47d7ed85ull, 0x05c759507e8e333eull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x26a9ffffffffc71aull, 0x1472aaa9cb8d5555ull, 0x9a208c6b4f20a418ull, 0x984f87adf7ae0c7full, 0x32126fced787c88full, 0x11560bf17baa99bcull}},
    {{0x26a9ffffffffc71eull, 0x1472aaa9cb8d5555ull, 0x9a208c6b4f20a418ull, 0x984f87adf7ae0c7full, 0x32126fced787c88full, 0x11560bf17baa99bcull}, {0x9354ffffffffe38dull, 0x0a395554e5c6aaaaull, 0xcd104635a790520cull, 0xcc27c3d6fbd7063full, 0x190937e76bc3e447ull, 0x08ab05f8bdd54cdeull}},
    {{0x88e2aaaaaaaa5ed1ull, 0x7098e38d0f671c71ull, 0x22d6108f142b8575ull, 0xcb14b4e7f4e810aaull, 0xed6dea691f5fb614ull, 0x171d6541fa38ccfaull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr std::uint64_t kIso3XDen[3][2][6] = {
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0xb9feffffffffaa63ull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}},
    {{0x000000000000000cull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0xb9feffffffffaa9full, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}},
    {{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr std::uint64_t kIso3YNum[4][2][6] = {
    {{0x12cfc71c71c6d706ull, 0xfc8c25ebf8c92f68ull, 0xf54439d87d27e500ull, 0x0f7da5d4a07f649bull, 0x59a4c18b076d1193ull, 0x1530477c7ab4113bull}, {0x12cfc71c71c6d706ull, 0xfc8c25ebf8c92f68ull, 0xf54439d87d27e500ull, 0x0f7da5d4a07f649bull, 0x59a4c18b076d1193ull, 0x1530477c7ab4113bull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x6238aaaaaaaa97beull, 0x5c2638e343d9c71cull, 0x88b58423c50ae15dull, 0x32c52d39fd3a042aull, 0xbb5b7a9a47d7ed85ull, 0x05c759507e8e333eull}},
    {{0x26a9ffffffffc71cull, 0x1472aaa9cb8d5555ull, 0x9a208c6b4f20a418ull, 0x984f87adf7ae0c7full, 0x32126fced787c88full, 0x11560bf17baa99bcull}, {0x9354ffffffffe38full, 0x0a395554e5c6aaaaull, 0xcd104635a790520cull, 0xcc27c3d6fbd7063full, 0x190937e76bc3e447ull, 0x08ab05f8bdd54cdeull}},
    {{0xe1b371c71c718b10ull, 0x4e79097a56dc4bd9ull, 0xb0e977c69aa27452ull, 0x761b0f37a1e26286ull, 0xfbf7043de3811ad0ull, 0x124c9ad43b6cf79bull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr std::uint64_t kIso3YDen[4][2][6] = {
    {{0xb9feffffffffa8fbull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}, {0xb9feffffffffa8fbull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0xb9feffffffffa9d3ull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}},
    {{0x0000000000000012ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0xb9feffffffffaa99ull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull}},
    {{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};

}  // namespace sdcred::detail
