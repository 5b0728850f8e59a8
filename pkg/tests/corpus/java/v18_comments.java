// top comment
/* block
   comment */
/** javadoc */
class Documented {
}
