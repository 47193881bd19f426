#pragma once

// Known-answer vectors. Group elements are zcash-format compressed hex; GT values are the
// twelve Fp coefficients (w^0..w^5, each c0 then c1) as 96-hex-char big-endian words.

namespace sdcred::testvec {

inline constexpr const char* kPairingG1G2 =
    "1250ebd871fc0a92a7b2d83168d0d727272d441befa15c503dd8e90ce98db3e7b6d194f60839c508a84305aaca1789b6089a1c5b46e5110b86750ec6a532348868a84045483c92b7af5af689452eafabf1a8943e50439f1d59882a98eaa0170f19f26337d205fb469cd6bd15c3d5a04dc88784fbb3d0b2dbdea54d43b2b73f2cbb12d58386a8703e0f948226e47ee89d06fba23eb7c5af0d9f80940ca771b6ffd5857baaf222eb95a7d2809d61bfe02e1bfd1b68ff02f0b8102ae1c2d5d5ab1a1368bb445c7c2d209703f239689ce34c0378a68e72a6b3b216da0e22a5031b54ddff57309396b38c881c4c849ec23e87193502b86edb8857c273fa075a50512937e0794e1e65a7617c90d8bd66065b1fffe51d7a579973b1315021ec3c19934f11b8b424cd48bf38fcef68083b0b0ec5c81a93b330ee1a677d0d15ff7b984e8978ef48881e32fac91b93b47333e2ba5703350f55a7aefcd3c31b4fcb6ce5771cc6a0e9786ab5973320c806ad360829107ba810c5a09ffdd9be2291a0c25a99a201b2f522473d171391125ba84dc4007cfbf2f8da752f7c74185203fcca589ac719c34dffbbaad8431dad1c1fb597aaa5018107154f25a764bd3c79937a45b84546da634b8f6be14a8061e55cceba478b23f7dacaa35c8ca78beae9624045b4b604c581234d086a9902249b64728ffd21a189e87935a954051c7cdba7b3872629a4fafc05066245cb9108f0242d0fe3ef0f41e58663bf08cf068672cbd01a7ec73baca4d72ca93544deff686bfd6df543d48eaa24afe47e1efde449383b676631";
inline constexpr const char* kPairingG1x5G2x7 =
    "016cab6a2a187ac996d062aad5f25c52d9211493b1434398d964368cd5ec1de2ddc196fcbc56f2a194a6fb8f256085e60ba88e19d2045e8a7dbb1dc59d5d8edb68e1ee7a795eab19ca9afc2741d7bdc3667114b5e80d630d71cb34873066df1301ca814ff7083094975f2186a643146a7440e3e451905945743752b1401bc11a377d49af8939df3388152e89ad3d7f8e14b3f4389d9347fa57f8cb1036f6a43936bc5c5fd3c36230112ea895bd6c45a554327d63d2125c19a887d30b3c6f64ef11be383ae281b84132b65252f7d909d7dd38df6442499e0bd42afe38b2b7565b2d4060a8d6dc956cec721d6cbcf80afe12d1178da6bc5e1724cc1259556b60896df6f840279c26ba15a8b2fa8bc8bf998edb9f201c848fb1dfcf66312c13ef47173f8d588daf92c713fccb463c052c8359021710b2b03fc987305afc2438e723104abcc268c48a2e2583a02bd555916e0b40356ba88972c575266d95cc1c8fd1615cdbbec72de888d956f0a2cfffa74e90f20b78fee5c08a55863e45f606dda900664b432d8a8a6a02dd38881449f1cd760080aedd769b4fa38e1826c10454c6b2634531f7a962e451398317a5e2496713696d0422f7122122fc4a6946d757b7a865ceb7441357744d379e00291ad5e80a43f17347acfde6fdd94ecd7bdce84900e4919a80ad50e8284b62cc2c32de5a34ff7024c9417943c38623e6cca63503092558c4d7cc575d4ce8936f3d20e92f16dd215f3d476c02356ee7741f7ced89d248a7c4ad28b374337e3b50eab071aeed42fe13cc7cde247c801bc05d563943";
inline constexpr const char* kG1Gen = "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb";
inline constexpr const char* kG2Gen = "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";
inline constexpr const char* kG1GenX7 = "b928f3beb93519eecf0145da903b40a4c97dca00b21f12ac0df3be9116ef2ef27b2ae6bcd4c5bc2d54ef5a70627efcb7";
inline constexpr const char* kG2GenX7 = "8d0273f6bf31ed37c3b8d68083ec3d8e20b5f2cc170fa24b9b5be35b34ed013f9a921f1cad1644d4bdb14674247234c8049cd1dbb2d2c3581e54c088135fef36505a6823d61b859437bfc79b617030dc8b40e32bad1fa85b9c0f368af6d38d3c";
inline constexpr const char* kG1GenXBig = "b107a16e81c0c146b6f8c3534ae45ce9b9b789670d4ed721522263719a9f0675c53aa132391a7139d4703ac6bf47b1d2";
inline constexpr const char* kG2GenXBig = "b3dc42a9fcabd63ae08f80cbb6c8beb974ad31c3ef400abd166bf5f23ae8eec6252b6d2bfa7ef0c84a263b3d10c2c187151265502af624ef21570ded3ff2a08f2ca334403c5143dc6f85827546fb4aafd3a1e634f8a2e9bbff7c32710c0db6c3";
inline constexpr const char* kBigScalar = "01234567890abcdef1234567890abcdef1234567890abcdef1234567890abcde";
inline constexpr const char* kBlsSk = "328388aff0d4a5b7dc9205abd374e7e98f3cd9f3418edb4eafda5fb16473d216";
inline constexpr const char* kBlsPk = "b53d21a4cfd562c469cc81514d4ce5a6b577d8403d32a394dc265dd190b47fa9f829fdd7963afdf972e5e77854051f6f";
inline constexpr const char* kBlsSigAbabab = "87815b102f66f83d5d10338e3057b03e6f3df05bc6304fc06d2431edbeb090faa2918eb1753431655d29d25630bc5795054a321446fc68a5b01d28aff97398e375bca392ac298bc28e6c93b6b15bfd68dcc5ca1b78317d8a986a29e540904131";
inline constexpr const char* kBlsDst = "BLS_SIG_BLS12381G2_XMD:SHA-256_SSWU_RO_POP_";

}  // namespace sdcred::testvec
