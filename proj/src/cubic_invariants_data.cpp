// Generated by tools/derive_cubic_invariants; kappa = -256.
namespace ternary {

extern const char* const kCubicIText =
    "144*c300*c120*c021*c003 - 48*c300*c120*c012^2 - 216*c300*c111*c030*c003 +"
    " 24*c300*c111*c021*c012 + 144*c300*c102*c030*c012 - 48*c300*c102*c021^2 -"
    " 48*c210^2*c021*c003 + 16*c210^2*c012^2 + 144*c210*c201*c030*c003 -"
    " 16*c210*c201*c021*c012 + 24*c210*c120*c111*c003 - 16*c210*c120*c102*c012 -"
    " 8*c210*c111^2*c012 + 24*c210*c111*c102*c021 - 48*c210*c102^2*c030 - 48*c201^2*c030*c012"
    " + 16*c201^2*c021^2 - 48*c201*c120^2*c003 + 24*c201*c120*c111*c012 -"
    " 16*c201*c120*c102*c021 - 8*c201*c111^2*c021 + 24*c201*c111*c102*c030 + 16*c120^2*c102^2"
    " - 8*c120*c111^2*c102 + c111^4";

extern const char* const kCubicJText =
    "11664*c300^2*c030^2*c003^2 - 7776*c300^2*c030*c021*c012*c003 + 1728*c300^2*c030*c012^3 +"
    " 1728*c300^2*c021^3*c003 - 432*c300^2*c021^2*c012^2 - 7776*c300*c210*c120*c030*c003^2 +"
    " 2592*c300*c210*c120*c021*c012*c003 - 576*c300*c210*c120*c012^3 +"
    " 2592*c300*c210*c111*c030*c012*c003 - 1728*c300*c210*c111*c021^2*c003 +"
    " 288*c300*c210*c111*c021*c012^2 + 2592*c300*c210*c102*c030*c021*c003 -"
    " 1728*c300*c210*c102*c030*c012^2 + 288*c300*c210*c102*c021^2*c012 +"
    " 2592*c300*c201*c120*c030*c012*c003 - 1728*c300*c201*c120*c021^2*c003 +"
    " 288*c300*c201*c120*c021*c012^2 + 2592*c300*c201*c111*c030*c021*c003 -"
    " 1728*c300*c201*c111*c030*c012^2 + 288*c300*c201*c111*c021^2*c012 -"
    " 7776*c300*c201*c102*c030^2*c003 + 2592*c300*c201*c102*c030*c021*c012 -"
    " 576*c300*c201*c102*c021^3 + 1728*c300*c120^3*c003^2 - 1728*c300*c120^2*c111*c012*c003 -"
    " 1728*c300*c120^2*c102*c021*c003 + 1152*c300*c120^2*c102*c012^2 +"
    " 1296*c300*c120*c111^2*c021*c003 + 144*c300*c120*c111^2*c012^2 +"
    " 2592*c300*c120*c111*c102*c030*c003 - 1440*c300*c120*c111*c102*c021*c012 -"
    " 1728*c300*c120*c102^2*c030*c012 + 1152*c300*c120*c102^2*c021^2 -"
    " 1080*c300*c111^3*c030*c003 - 72*c300*c111^3*c021*c012 + 1296*c300*c111^2*c102*c030*c012"
    " + 144*c300*c111^2*c102*c021^2 - 1728*c300*c111*c102^2*c030*c021 +"
    " 1728*c300*c102^3*c030^2 + 1728*c210^3*c030*c003^2 - 576*c210^3*c021*c012*c003 +"
    " 128*c210^3*c012^3 - 1728*c210^2*c201*c030*c012*c003 + 1152*c210^2*c201*c021^2*c003 -"
    " 192*c210^2*c201*c021*c012^2 - 432*c210^2*c120^2*c003^2 + 288*c210^2*c120*c111*c012*c003"
    " + 288*c210^2*c120*c102*c021*c003 - 192*c210^2*c120*c102*c012^2 +"
    " 144*c210^2*c111^2*c021*c003 - 96*c210^2*c111^2*c012^2 - 1728*c210^2*c111*c102*c030*c003"
    " + 288*c210^2*c111*c102*c021*c012 + 1152*c210^2*c102^2*c030*c012 -"
    " 432*c210^2*c102^2*c021^2 - 1728*c210*c201^2*c030*c021*c003 +"
    " 1152*c210*c201^2*c030*c012^2 - 192*c210*c201^2*c021^2*c012 +"
    " 288*c210*c201*c120^2*c012*c003 - 1440*c210*c201*c120*c111*c021*c003 +"
    " 288*c210*c201*c120*c111*c012^2 + 2592*c210*c201*c120*c102*c030*c003 -"
    " 96*c210*c201*c120*c102*c021*c012 + 1296*c210*c201*c111^2*c030*c003 -"
    " 48*c210*c201*c111^2*c021*c012 - 1440*c210*c201*c111*c102*c030*c012 +"
    " 288*c210*c201*c111*c102*c021^2 + 288*c210*c201*c102^2*c030*c021 +"
    " 288*c210*c120^2*c111*c102*c003 - 192*c210*c120^2*c102^2*c012 - 72*c210*c120*c111^3*c003"
    " - 48*c210*c120*c111^2*c102*c012 + 288*c210*c120*c111*c102^2*c021 -"
    " 576*c210*c120*c102^3*c030 + 24*c210*c111^4*c012 - 72*c210*c111^3*c102*c021 +"
    " 144*c210*c111^2*c102^2*c030 + 1728*c201^3*c030^2*c003 - 576*c201^3*c030*c021*c012 +"
    " 128*c201^3*c021^3 + 1152*c201^2*c120^2*c021*c003 - 432*c201^2*c120^2*c012^2 -"
    " 1728*c201^2*c120*c111*c030*c003 + 288*c201^2*c120*c111*c021*c012 +"
    " 288*c201^2*c120*c102*c030*c012 - 192*c201^2*c120*c102*c021^2 +"
    " 144*c201^2*c111^2*c030*c012 - 96*c201^2*c111^2*c021^2 + 288*c201^2*c111*c102*c030*c021"
    " - 432*c201^2*c102^2*c030^2 - 576*c201*c120^3*c102*c003 + 144*c201*c120^2*c111^2*c003 +"
    " 288*c201*c120^2*c111*c102*c012 - 192*c201*c120^2*c102^2*c021 - 72*c201*c120*c111^3*c012"
    " - 48*c201*c120*c111^2*c102*c021 + 288*c201*c120*c111*c102^2*c030 + 24*c201*c111^4*c021"
    " - 72*c201*c111^3*c102*c030 + 128*c120^3*c102^3 - 96*c120^2*c111^2*c102^2 +"
    " 24*c120*c111^4*c102 - 2*c111^6";

}  // namespace ternary
