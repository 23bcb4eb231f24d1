from apps.cyclotomic.models.cycnum import CycNum, cyclotomic_polynomial, euler_phi
