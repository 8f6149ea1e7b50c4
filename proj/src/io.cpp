namespace ksys {}
