@Component({ selector: "app-root" })
class AppComponent {
  @Input() title: string = "";
  render(): string {
    return this.title;
  }
}
